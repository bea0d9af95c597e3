#pragma once

#include <random>
#include <vector>

#include "nv/element.hpp"
#include "nv/partition.hpp"

namespace nvtest {

/// Deterministic generator for property-style tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    unsigned bit() { return static_cast<unsigned>(engine_() & 1u); }

    int below(int bound) {
        std::uniform_int_distribution<int> dist(0, bound - 1);
        return dist(engine_);
    }

    nv::Word word(int max_len) {
        int len = below(max_len + 1);
        nv::Word w;
        for (int i = 0; i < len; ++i)
            w = w.append(bit());
        return w;
    }

    nv::Address address(int n, int max_coord_len) {
        nv::Address a = nv::Address::root(n);
        for (int d = 1; d <= n; ++d)
            a = a.with_coord(d, word(max_coord_len));
        return a;
    }

    /// Two incomparable addresses.
    std::pair<nv::Address, nv::Address> incomparable_pair(int n, int max_coord_len) {
        for (int attempt = 0; attempt < 10000; ++attempt) {
            nv::Address a = address(n, max_coord_len);
            nv::Address b = address(n, max_coord_len);
            if (a.incomparable(b))
                return {a, b};
        }
        throw std::runtime_error("failed to draw an incomparable pair");
    }

    /// A product of a few random transpositions.
    nv::Element element(int n, int max_coord_len = 3, int max_factors = 5) {
        nv::Element e = nv::Element::identity(n);
        int factors = 1 + below(max_factors);
        for (int i = 0; i < factors; ++i) {
            auto [a, b] = incomparable_pair(n, max_coord_len);
            e = compose(e, nv::transposition(a, b));
        }
        return e;
    }

private:
    std::mt19937_64 engine_;
};

inline bool is_partition(const std::vector<nv::Address>& cells) {
    return nv::validate_partition(cells) == nv::PartitionStatus::ok;
}

inline bool element_partitions_ok(const nv::Element& e) {
    std::vector<nv::Address> doms, cods;
    for (const nv::Cell& c : e.cells()) {
        doms.push_back(c.dom);
        cods.push_back(c.cod);
    }
    return is_partition(doms) && is_partition(cods);
}

} // namespace nvtest
