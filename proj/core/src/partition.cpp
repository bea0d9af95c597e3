#include "nv/partition.hpp"

#include <algorithm>

namespace nv {

namespace {

constexpr unsigned kMaxLogDen = 120;

[[noreturn]] void too_deep() {
    throw Error("dyadic accumulator exceeded 2^-120 resolution");
}

} // namespace

Dyadic Dyadic::operator+(const Dyadic& o) const {
    unsigned e = std::max(log_den, o.log_den);
    if (e > kMaxLogDen)
        too_deep();
    Dyadic r;
    r.num = (num << (e - log_den)) + (o.num << (e - o.log_den));
    r.log_den = e;
    return r.normalized();
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
    if (log_den + o.log_den > kMaxLogDen)
        too_deep();
    return Dyadic{num * o.num, log_den + o.log_den}.normalized();
}

std::string Dyadic::str() const {
    auto dec = [](unsigned __int128 v) {
        if (v == 0)
            return std::string("0");
        std::string s;
        while (v > 0) {
            s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        }
        std::reverse(s.begin(), s.end());
        return s;
    };
    if (log_den == 0)
        return dec(num);
    return dec(num) + "/2^" + std::to_string(log_den);
}

Dyadic measure(const Address& a) {
    std::size_t t = a.total_length();
    if (t > kMaxLogDen)
        too_deep();
    return Dyadic::half_power(static_cast<unsigned>(t));
}

PartitionStatus validate_partition(std::span<const Address> cells) {
    if (cells.empty())
        throw Error("a partition needs at least one cell");
    int n = cells.front().arity();
    for (const Address& c : cells)
        if (c.arity() != n)
            throw ArityMismatch("partition cells of mixed arity");

    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (!cells[i].incomparable(cells[j]))
                return PartitionStatus::overlap;

    Dyadic total = Dyadic::zero();
    for (const Address& c : cells)
        total = total + measure(c);
    return total.is_one() ? PartitionStatus::ok : PartitionStatus::gap;
}

std::size_t delta_size(int n) {
    return std::size_t{1} << (2 * n);
}

std::vector<Address> enumerate_delta(int n) {
    std::size_t count = delta_size(n);
    std::vector<Address> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(delta_at(n, i));
    return out;
}

Address delta_at(int n, std::size_t index) {
    if (index >= delta_size(n))
        throw BadParameters("delta index out of range");
    Address a = Address::root(n);
    for (int d = 1; d <= n; ++d) {
        // Two bits per coordinate, earlier coordinates most significant.
        unsigned two = static_cast<unsigned>(index >> (2 * (n - d))) & 3u;
        Word w = Word().append((two >> 1) & 1u).append(two & 1u);
        a = a.with_coord(d, w);
    }
    return a;
}

std::size_t delta_index(const Address& a) {
    std::size_t idx = 0;
    for (int d = 1; d <= a.arity(); ++d) {
        const Word& w = a.coord(d);
        if (w.size() != 2)
            throw BadParameters("address is not in the length-2 grid: " + a.str());
        idx = (idx << 2) | (w.bit(0) << 1) | w.bit(1);
    }
    return idx;
}

namespace {

void emit_words_of_length(int len, std::vector<Word>& scratch) {
    scratch.clear();
    std::size_t count = std::size_t{1} << len;
    for (std::size_t v = 0; v < count; ++v) {
        Word w;
        for (int i = len - 1; i >= 0; --i)
            w = w.append(static_cast<unsigned>(v >> i) & 1u);
        scratch.push_back(w);
    }
}

void fill_coords(int n, int d, int remaining, Address& partial, std::vector<Address>& out) {
    if (d > n) {
        if (remaining == 0)
            out.push_back(partial);
        return;
    }
    std::vector<Word> words;
    for (int len = remaining; len >= 0; --len) {
        emit_words_of_length(len, words);
        for (Word w : words) {
            Address next = partial.with_coord(d, w);
            fill_coords(n, d + 1, remaining - len, next, out);
        }
    }
}

} // namespace

std::vector<Address> enumerate_addresses(int n, int total_length_bound) {
    if (total_length_bound < 0)
        throw BadParameters("total length bound must be >= 0");
    std::vector<Address> out;
    Address root = Address::root(n);
    for (int total = 0; total <= total_length_bound; ++total)
        fill_coords(n, 1, total, root, out);
    return out;
}

} // namespace nv
