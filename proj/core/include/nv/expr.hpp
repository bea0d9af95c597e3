#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "nv/element.hpp"
#include "nv/generators.hpp"

namespace nv {

/// Named generators of the word language.  X/Pi/PiBar/C are the
/// Hennig-Matucci family, A/Bhat/B/Baker the baker's-map builders, and
/// FinA..FinQ the finite-presentation elements a, b, c, p, q_d.
enum class GenName { X, Pi, PiBar, C, A, Bhat, B, Baker, FinA, FinB, FinC, FinP, FinQ };

enum class ExprKind {
    Identity,
    Transposition,
    Named,
    Product,
    Inverse,
    Conjugate,
    Commutator,
    Power,
    Localize
};

struct ExprNode {
    ExprKind kind = ExprKind::Identity;
    GenName name = GenName::X; // Named only
    int arg1 = 0;              // Named: m (X/Pi/PiBar/C) or d (A/Bhat/B/Baker/FinQ); Power: exponent
    int arg2 = 0;              // Named: d (X/C)
    Address addr1, addr2;      // Transposition, Localize (addr1), Named with address args
    int child1 = -1, child2 = -1;
    std::vector<int> list; // Product children
};

/// A word over the generator alphabet, as a small arena-backed syntax tree.
class GenExpr {
public:
    GenExpr() { root_ = add(ExprNode{}); }

    static GenExpr id() { return GenExpr(); }
    static GenExpr transposition(const Address& a, const Address& b);
    static GenExpr named(GenName name, int arg1, int arg2 = 0);
    static GenExpr named(GenName name, int d, const Address& a);
    static GenExpr named(GenName name, int d, const Address& a, const Address& b);
    static GenExpr product(std::vector<GenExpr> factors);
    static GenExpr inverse(GenExpr e);
    static GenExpr conjugate(GenExpr base, GenExpr by);
    static GenExpr commutator(GenExpr g, GenExpr h);
    static GenExpr power(GenExpr e, int k);
    static GenExpr localized(const Address& prefix, GenExpr e);

    int root() const { return root_; }
    const std::vector<ExprNode>& nodes() const { return nodes_; }
    const ExprNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

    /// Structural equality of syntax trees.
    friend bool operator==(const GenExpr& a, const GenExpr& b);

private:
    int add(ExprNode n) {
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }

    int absorb(const GenExpr& other);

    std::vector<ExprNode> nodes_;
    int root_ = -1;
};

/// Parses the word grammar:
///   expr   := factor { "*" factor }
///   factor := atom [ "^" ( integer | atom ) ]
///   atom   := "id" | "t[" addr "|" addr "]" | name "(" args ")"
///           | "[" expr "," expr "]" | "pre(" addr "," expr ")" | "(" expr ")"
/// Products apply left to right.  Address literals must have arity n.
GenExpr parse_expr(std::string_view text, int n);

/// Canonical text; parse_expr(format_expr(e), n) is structurally e.
std::string format_expr(const GenExpr& e);

/// Memoizes the named generators so relation sweeps do not rebuild them.
class EvalContext {
public:
    explicit EvalContext(int n) : n_(n) {}

    int arity() const { return n_; }
    const Element& hm(HmKind kind, int m, int d);

private:
    int n_;
    std::map<std::tuple<int, int, int>, Element> cache_;
};

/// Evaluates the word into the group element it spells.  Errors from the
/// generator builders propagate with an expression-path note attached.
Element evaluate(const GenExpr& e, int n, EvalContext* ctx = nullptr);

/// A relation file: header "n=<arity>", then one "lhs = rhs" line per
/// relation; "#" starts a comment.
struct RelationFile {
    int n = 0;
    std::vector<std::pair<GenExpr, GenExpr>> relations;
};

RelationFile read_relation_file(std::istream& in);
void write_relation_file(std::ostream& out, const RelationFile& file);

} // namespace nv
