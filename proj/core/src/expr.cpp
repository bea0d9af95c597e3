#include "nv/expr.hpp"

#include <cctype>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "nv/special.hpp"

namespace nv {

GenExpr GenExpr::transposition(const Address& a, const Address& b) {
    GenExpr e;
    ExprNode n;
    n.kind = ExprKind::Transposition;
    n.addr1 = a;
    n.addr2 = b;
    e.nodes_.clear();
    e.root_ = e.add(std::move(n));
    return e;
}

GenExpr GenExpr::named(GenName name, int arg1, int arg2) {
    GenExpr e;
    ExprNode n;
    n.kind = ExprKind::Named;
    n.name = name;
    n.arg1 = arg1;
    n.arg2 = arg2;
    e.nodes_.clear();
    e.root_ = e.add(std::move(n));
    return e;
}

GenExpr GenExpr::named(GenName name, int d, const Address& a) {
    GenExpr e = named(name, d);
    e.nodes_[static_cast<std::size_t>(e.root_)].addr1 = a;
    return e;
}

GenExpr GenExpr::named(GenName name, int d, const Address& a, const Address& b) {
    GenExpr e = named(name, d, a);
    e.nodes_[static_cast<std::size_t>(e.root_)].addr2 = b;
    return e;
}

int GenExpr::absorb(const GenExpr& other) {
    int offset = static_cast<int>(nodes_.size());
    for (const ExprNode& n : other.nodes_) {
        ExprNode copy = n;
        if (copy.child1 >= 0)
            copy.child1 += offset;
        if (copy.child2 >= 0)
            copy.child2 += offset;
        for (int& c : copy.list)
            c += offset;
        nodes_.push_back(std::move(copy));
    }
    return other.root_ + offset;
}

GenExpr GenExpr::product(std::vector<GenExpr> factors) {
    if (factors.empty())
        return GenExpr::id();
    if (factors.size() == 1)
        return std::move(factors.front());
    GenExpr e;
    e.nodes_.clear();
    ExprNode prod;
    prod.kind = ExprKind::Product;
    for (const GenExpr& f : factors)
        prod.list.push_back(e.absorb(f));
    e.root_ = e.add(std::move(prod));
    return e;
}

GenExpr GenExpr::inverse(GenExpr inner) {
    GenExpr e;
    e.nodes_.clear();
    ExprNode n;
    n.kind = ExprKind::Inverse;
    n.child1 = e.absorb(inner);
    e.root_ = e.add(std::move(n));
    return e;
}

GenExpr GenExpr::conjugate(GenExpr base, GenExpr by) {
    GenExpr e;
    e.nodes_.clear();
    ExprNode n;
    n.kind = ExprKind::Conjugate;
    n.child1 = e.absorb(base);
    n.child2 = e.absorb(by);
    e.root_ = e.add(std::move(n));
    return e;
}

GenExpr GenExpr::commutator(GenExpr g, GenExpr h) {
    GenExpr e;
    e.nodes_.clear();
    ExprNode n;
    n.kind = ExprKind::Commutator;
    n.child1 = e.absorb(g);
    n.child2 = e.absorb(h);
    e.root_ = e.add(std::move(n));
    return e;
}

GenExpr GenExpr::power(GenExpr inner, int k) {
    // "^-1" is the inversion spelling, so exponent -1 builds an Inverse
    // node; this keeps parse(format(e)) structurally faithful.
    if (k == -1)
        return inverse(std::move(inner));
    GenExpr e;
    e.nodes_.clear();
    ExprNode n;
    n.kind = ExprKind::Power;
    n.arg1 = k;
    n.child1 = e.absorb(inner);
    e.root_ = e.add(std::move(n));
    return e;
}

GenExpr GenExpr::localized(const Address& prefix, GenExpr inner) {
    GenExpr e;
    e.nodes_.clear();
    ExprNode n;
    n.kind = ExprKind::Localize;
    n.addr1 = prefix;
    n.child1 = e.absorb(inner);
    e.root_ = e.add(std::move(n));
    return e;
}

namespace {

bool node_equal(const GenExpr& a, int ia, const GenExpr& b, int ib) {
    const ExprNode& na = a.node(ia);
    const ExprNode& nb = b.node(ib);
    if (na.kind != nb.kind || na.name != nb.name || na.arg1 != nb.arg1 || na.arg2 != nb.arg2)
        return false;
    if (!(na.addr1 == nb.addr1) || !(na.addr2 == nb.addr2))
        return false;
    if ((na.child1 >= 0) != (nb.child1 >= 0) || (na.child2 >= 0) != (nb.child2 >= 0))
        return false;
    if (na.child1 >= 0 && !node_equal(a, na.child1, b, nb.child1))
        return false;
    if (na.child2 >= 0 && !node_equal(a, na.child2, b, nb.child2))
        return false;
    if (na.list.size() != nb.list.size())
        return false;
    for (std::size_t i = 0; i < na.list.size(); ++i)
        if (!node_equal(a, na.list[i], b, nb.list[i]))
            return false;
    return true;
}

} // namespace

bool operator==(const GenExpr& a, const GenExpr& b) {
    return node_equal(a, a.root(), b, b.root());
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int n = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c))
            fail(std::string("expected '") + c + "' " + what);
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }
};

int parse_int(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '-')
        ++cur.pos;
    std::size_t digits_start = cur.pos;
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
    if (cur.pos == digits_start)
        cur.fail("expected an integer");
    return std::stoi(std::string(cur.text.substr(start, cur.pos - start)));
}

Address parse_address(Cursor& cur) {
    cur.expect('(', "starting an address");
    std::vector<Word> coords;
    while (true) {
        cur.skip_ws();
        if (cur.eat('-')) {
            coords.push_back(Word());
        } else {
            std::size_t start = cur.pos;
            while (cur.pos < cur.text.size() &&
                   (cur.text[cur.pos] == '0' || cur.text[cur.pos] == '1'))
                ++cur.pos;
            if (cur.pos == start)
                cur.fail("expected a binary word or '-'");
            coords.push_back(Word::from_string(cur.text.substr(start, cur.pos - start)));
        }
        if (cur.eat(','))
            continue;
        cur.expect(')', "closing an address");
        break;
    }
    Address a(std::span<const Word>(coords.data(), coords.size()));
    if (a.arity() != cur.n)
        throw ArityMismatch("address " + a.str() + " has arity " +
                            std::to_string(a.arity()) + ", expected " + std::to_string(cur.n));
    return a;
}

std::string parse_name(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() &&
           std::isalpha(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
    return std::string(cur.text.substr(start, cur.pos - start));
}

GenExpr parse_product(Cursor& cur);

GenExpr parse_atom(Cursor& cur) {
    cur.skip_ws();
    if (cur.pos >= cur.text.size())
        cur.fail("unexpected end of expression");

    if (cur.eat('(')) {
        GenExpr e = parse_product(cur);
        cur.expect(')', "closing a parenthesized expression");
        return e;
    }
    if (cur.eat('[')) {
        GenExpr g = parse_product(cur);
        cur.expect(',', "between commutator entries");
        GenExpr h = parse_product(cur);
        cur.expect(']', "closing a commutator");
        return GenExpr::commutator(std::move(g), std::move(h));
    }

    std::size_t name_pos = cur.pos;
    std::string name = parse_name(cur);
    if (name.empty())
        cur.fail("expected an expression atom");

    if (name == "id")
        return GenExpr::id();
    if (name == "t") {
        cur.expect('[', "after 't'");
        Address a = parse_address(cur);
        cur.expect('|', "between transposition entries");
        Address b = parse_address(cur);
        cur.expect(']', "closing a transposition");
        return GenExpr::transposition(a, b);
    }
    if (name == "pre") {
        cur.expect('(', "after 'pre'");
        Address prefix = parse_address(cur);
        cur.expect(',', "between prefix and expression");
        GenExpr e = parse_product(cur);
        cur.expect(')', "closing 'pre'");
        return GenExpr::localized(prefix, std::move(e));
    }

    cur.expect('(', ("after generator name '" + name + "'").c_str());
    if (name == "X" || name == "C") {
        int m = parse_int(cur);
        cur.expect(',', "between generator arguments");
        int d = parse_int(cur);
        cur.expect(')', "closing generator arguments");
        return GenExpr::named(name == "X" ? GenName::X : GenName::C, m, d);
    }
    if (name == "pi" || name == "pibar") {
        int m = parse_int(cur);
        cur.expect(')', "closing generator arguments");
        return GenExpr::named(name == "pi" ? GenName::Pi : GenName::PiBar, m);
    }
    if (name == "A") {
        int d = parse_int(cur);
        cur.expect(',', "between generator arguments");
        Address a = parse_address(cur);
        cur.expect(',', "between generator arguments");
        Address b = parse_address(cur);
        cur.expect(')', "closing generator arguments");
        return GenExpr::named(GenName::A, d, a, b);
    }
    if (name == "Bhat" || name == "B" || name == "baker") {
        int d = parse_int(cur);
        cur.expect(',', "between generator arguments");
        Address a = parse_address(cur);
        cur.expect(')', "closing generator arguments");
        GenName g = name == "Bhat" ? GenName::Bhat
                                   : (name == "B" ? GenName::B : GenName::Baker);
        return GenExpr::named(g, d, a);
    }
    if (name == "q") {
        int d = parse_int(cur);
        cur.expect(')', "closing generator arguments");
        return GenExpr::named(GenName::FinQ, d);
    }
    if (name == "a" || name == "b" || name == "c" || name == "p") {
        cur.expect(')', "closing generator arguments");
        GenName g = name == "a" ? GenName::FinA
                                : (name == "b" ? GenName::FinB
                                               : (name == "c" ? GenName::FinC : GenName::FinP));
        return GenExpr::named(g, 0);
    }
    throw ParseError("unknown generator name '" + name + "'", name_pos);
}

GenExpr parse_factor(Cursor& cur) {
    GenExpr base = parse_atom(cur);
    cur.skip_ws();
    if (!cur.eat('^'))
        return base;
    cur.skip_ws();
    if (cur.pos < cur.text.size() &&
        (cur.text[cur.pos] == '-' || std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))))
        return GenExpr::power(std::move(base), parse_int(cur));
    return GenExpr::conjugate(std::move(base), parse_atom(cur));
}

GenExpr parse_product(Cursor& cur) {
    std::vector<GenExpr> factors;
    factors.push_back(parse_factor(cur));
    while (cur.eat('*'))
        factors.push_back(parse_factor(cur));
    return GenExpr::product(std::move(factors));
}

} // namespace

GenExpr parse_expr(std::string_view text, int n) {
    Cursor cur{text, 0, n};
    GenExpr e = parse_product(cur);
    cur.skip_ws();
    if (cur.pos != cur.text.size())
        cur.fail("trailing characters after expression");
    return e;
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

namespace {

bool formats_as_atom(const ExprNode& n) {
    switch (n.kind) {
    case ExprKind::Identity:
    case ExprKind::Transposition:
    case ExprKind::Named:
    case ExprKind::Commutator:
    case ExprKind::Localize:
        return true;
    default:
        return false;
    }
}

void format_node(const GenExpr& e, int idx, std::string& out);

void format_as_atom(const GenExpr& e, int idx, std::string& out) {
    if (formats_as_atom(e.node(idx))) {
        format_node(e, idx, out);
    } else {
        out.push_back('(');
        format_node(e, idx, out);
        out.push_back(')');
    }
}

void format_node(const GenExpr& e, int idx, std::string& out) {
    const ExprNode& n = e.node(idx);
    switch (n.kind) {
    case ExprKind::Identity:
        out += "id";
        return;
    case ExprKind::Transposition:
        out += "t[" + n.addr1.str() + "|" + n.addr2.str() + "]";
        return;
    case ExprKind::Named:
        switch (n.name) {
        case GenName::X:
            out += "X(" + std::to_string(n.arg1) + "," + std::to_string(n.arg2) + ")";
            return;
        case GenName::C:
            out += "C(" + std::to_string(n.arg1) + "," + std::to_string(n.arg2) + ")";
            return;
        case GenName::Pi:
            out += "pi(" + std::to_string(n.arg1) + ")";
            return;
        case GenName::PiBar:
            out += "pibar(" + std::to_string(n.arg1) + ")";
            return;
        case GenName::A:
            out += "A(" + std::to_string(n.arg1) + "," + n.addr1.str() + "," + n.addr2.str() +
                   ")";
            return;
        case GenName::Bhat:
            out += "Bhat(" + std::to_string(n.arg1) + "," + n.addr1.str() + ")";
            return;
        case GenName::B:
            out += "B(" + std::to_string(n.arg1) + "," + n.addr1.str() + ")";
            return;
        case GenName::Baker:
            out += "baker(" + std::to_string(n.arg1) + "," + n.addr1.str() + ")";
            return;
        case GenName::FinA:
            out += "a()";
            return;
        case GenName::FinB:
            out += "b()";
            return;
        case GenName::FinC:
            out += "c()";
            return;
        case GenName::FinP:
            out += "p()";
            return;
        case GenName::FinQ:
            out += "q(" + std::to_string(n.arg1) + ")";
            return;
        }
        return;
    case ExprKind::Product: {
        bool first = true;
        for (int c : n.list) {
            if (!first)
                out += " * ";
            first = false;
            const ExprNode& cn = e.node(c);
            if (cn.kind == ExprKind::Product) {
                out.push_back('(');
                format_node(e, c, out);
                out.push_back(')');
            } else {
                format_node(e, c, out);
            }
        }
        return;
    }
    case ExprKind::Inverse:
        format_as_atom(e, n.child1, out);
        out += "^-1";
        return;
    case ExprKind::Conjugate:
        format_as_atom(e, n.child1, out);
        out += " ^ ";
        format_as_atom(e, n.child2, out);
        return;
    case ExprKind::Commutator:
        out.push_back('[');
        format_node(e, n.child1, out);
        out += ", ";
        format_node(e, n.child2, out);
        out.push_back(']');
        return;
    case ExprKind::Power:
        format_as_atom(e, n.child1, out);
        out += "^" + std::to_string(n.arg1);
        return;
    case ExprKind::Localize:
        out += "pre(" + n.addr1.str() + ", ";
        format_node(e, n.child1, out);
        out.push_back(')');
        return;
    }
}

} // namespace

std::string format_expr(const GenExpr& e) {
    std::string out;
    format_node(e, e.root(), out);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

const Element& EvalContext::hm(HmKind kind, int m, int d) {
    auto key = std::make_tuple(static_cast<int>(kind), m, d);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, hm_generator(kind, m, d, n_)).first;
    return it->second;
}

namespace {

void check_literal_arity(const Address& a, int n, const char* where) {
    if (a.arity() != n)
        throw ArityMismatch(std::string("address literal in ") + where + " has arity " +
                            std::to_string(a.arity()) + ", expected " + std::to_string(n));
}

Element eval_node(const GenExpr& e, int idx, EvalContext& ctx) {
    int n = ctx.arity();
    const ExprNode& node = e.node(idx);
    switch (node.kind) {
    case ExprKind::Identity:
        return Element::identity(n);
    case ExprKind::Transposition:
        check_literal_arity(node.addr1, n, "transposition");
        check_literal_arity(node.addr2, n, "transposition");
        return transposition(node.addr1, node.addr2);
    case ExprKind::Named:
        switch (node.name) {
        case GenName::X:
            return ctx.hm(HmKind::X, node.arg1, node.arg2);
        case GenName::Pi:
            return ctx.hm(HmKind::Pi, node.arg1, 0);
        case GenName::PiBar:
            return ctx.hm(HmKind::PiBar, node.arg1, 0);
        case GenName::C:
            return ctx.hm(HmKind::C, node.arg1, node.arg2);
        case GenName::A:
            check_literal_arity(node.addr1, n, "A");
            check_literal_arity(node.addr2, n, "A");
            return gen_A(node.arg1, node.addr1, node.addr2);
        case GenName::Bhat:
            check_literal_arity(node.addr1, n, "Bhat");
            return gen_Bhat(node.arg1, node.addr1);
        case GenName::B:
            check_literal_arity(node.addr1, n, "B");
            return gen_B(node.arg1, node.addr1);
        case GenName::Baker:
            check_literal_arity(node.addr1, n, "baker");
            return baker_direct(node.arg1, node.addr1);
        case GenName::FinA:
            return special_elements(n).a;
        case GenName::FinB:
            return special_elements(n).b;
        case GenName::FinC:
            return special_elements(n).c;
        case GenName::FinP:
            return special_elements(n).p;
        case GenName::FinQ: {
            int d = node.arg1;
            if (d < 1 || d > n)
                throw BadDimension("q(d) needs 1 <= d <= n");
            return special_elements(n).q[static_cast<std::size_t>(d) - 1];
        }
        }
        throw BadParameters("unknown named generator");
    case ExprKind::Product: {
        Element acc = Element::identity(n);
        for (int c : node.list)
            acc = compose(acc, eval_node(e, c, ctx));
        return acc;
    }
    case ExprKind::Inverse:
        return eval_node(e, node.child1, ctx).inverse();
    case ExprKind::Conjugate:
        return conjugate(eval_node(e, node.child1, ctx), eval_node(e, node.child2, ctx));
    case ExprKind::Commutator:
        return commutator(eval_node(e, node.child1, ctx), eval_node(e, node.child2, ctx));
    case ExprKind::Power:
        return eval_node(e, node.child1, ctx).power(node.arg1);
    case ExprKind::Localize:
        check_literal_arity(node.addr1, n, "pre");
        return localize(node.addr1, eval_node(e, node.child1, ctx));
    }
    throw BadParameters("unknown expression node");
}

} // namespace

Element evaluate(const GenExpr& e, int n, EvalContext* ctx) {
    if (ctx) {
        if (ctx->arity() != n)
            throw ArityMismatch("evaluation context arity differs from requested arity");
        return eval_node(e, e.root(), *ctx);
    }
    EvalContext local(n);
    return eval_node(e, e.root(), local);
}

// ---------------------------------------------------------------------------
// Relation files
// ---------------------------------------------------------------------------

RelationFile read_relation_file(std::istream& in) {
    RelationFile file;
    std::string line;
    std::size_t line_no = 0;
    bool have_n = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        std::size_t hash = sv.find('#');
        if (hash != std::string_view::npos)
            sv = sv.substr(0, hash);
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back())))
            sv.remove_suffix(1);
        while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front())))
            sv.remove_prefix(1);
        if (sv.empty())
            continue;
        if (!have_n) {
            if (sv.substr(0, 2) != "n=")
                throw ParseError("relation file must start with a 'n=<arity>' header", line_no);
            file.n = std::stoi(std::string(sv.substr(2)));
            have_n = true;
            continue;
        }
        // Split on the '=' separating the two sides.  '=' cannot occur
        // inside the word grammar, so the first occurrence is the split.
        std::size_t eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("relation line lacks '='", line_no);
        GenExpr lhs = parse_expr(sv.substr(0, eq), file.n);
        GenExpr rhs = parse_expr(sv.substr(eq + 1), file.n);
        file.relations.emplace_back(std::move(lhs), std::move(rhs));
    }
    if (!have_n)
        throw ParseError("relation file is empty", line_no);
    return file;
}

void write_relation_file(std::ostream& out, const RelationFile& file) {
    out << "n=" << file.n << "\n";
    for (const auto& [lhs, rhs] : file.relations)
        out << format_expr(lhs) << " = " << format_expr(rhs) << "\n";
}

} // namespace nv
