#include "nv/address.hpp"

#include <vector>

namespace nv {

std::string Address::str() const {
    std::string out = "(";
    for (int d = 1; d <= n_; ++d) {
        if (d > 1)
            out.push_back(',');
        const Word& w = w_[d - 1];
        out += w.empty() ? "-" : w.str();
    }
    out.push_back(')');
    return out;
}

Address Address::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, pos); };

    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };

    skip_ws();
    if (pos >= text.size() || text[pos] != '(')
        throw fail("expected '(' starting an address");
    ++pos;

    std::vector<Word> coords;
    while (true) {
        skip_ws();
        if (pos < text.size() && text[pos] == '-') {
            coords.push_back(Word());
            ++pos;
        } else {
            std::size_t start = pos;
            while (pos < text.size() && (text[pos] == '0' || text[pos] == '1'))
                ++pos;
            if (pos == start)
                throw fail("expected a binary word or '-'");
            coords.push_back(Word::from_string(text.substr(start, pos - start)));
        }
        skip_ws();
        if (pos >= text.size())
            throw fail("unterminated address");
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ')') {
            ++pos;
            break;
        }
        throw fail("expected ',' or ')' in address");
    }
    skip_ws();
    if (pos != text.size())
        throw fail("trailing characters after address");
    return Address(std::span<const Word>(coords.data(), coords.size()));
}

} // namespace nv
