// Bounded-integer constraint enumeration.  Systems carry linear relations,
// strict absolute-value inequalities, parity and divisibility conditions,
// and guarded (conditional) constraints; solve() lists every solution in
// lexicographic variable order.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <cstdint>

namespace trifree {

struct LinExpr {
    int constant = 0;
    std::vector<std::pair<int, int>> terms;  // (variable index, coefficient)

    LinExpr& add(int var, int coef = 1);
    LinExpr& add_const(int c) { constant += c; return *this; }
};

enum class Rel { Eq, Le, Lt, Ge, Gt };

struct Constraint {
    enum Type { Linear, AbsGt, Parity, Divisible, Conditional } type = Linear;
    LinExpr lhs;                 // Linear: lhs REL rhs; AbsGt: |lhs| > rhs
    LinExpr rhs;
    Rel rel = Rel::Eq;           // Linear only
    bool odd = false;            // Parity: lhs odd/even
    int divisor = 3;             // Divisible
    // Conditional: if guard >= guard_bound then all of `then` hold.
    LinExpr guard;
    int guard_bound = 1;
    std::vector<Constraint> then_constraints;
};

struct ConstraintSystem {
    std::string id;
    std::vector<std::string> var_names;
    std::vector<int> lo, hi;
    std::vector<Constraint> constraints;

    int add_var(const std::string& name, int lo_, int hi_);
    int var(const std::string& name) const;        // -1 when absent
    LinExpr expr(std::initializer_list<const char*> names, int constant = 0) const;

    void linear(LinExpr lhs, Rel rel, LinExpr rhs);
    void abs_gt(LinExpr lhs, LinExpr rhs);
    void parity(LinExpr e, bool odd);
    void conditional(LinExpr guard, int bound, Constraint then);
};

using SolutionRow = std::vector<int>;

// Complete, duplicate-free enumeration, rows sorted lexicographically.
// `reverse_order` explores values descending (results are re-sorted); it
// exists as the independent second route for exhaustiveness checks.
std::vector<SolutionRow> solve(const ConstraintSystem& sys, int jobs = 1,
                               bool reverse_order = false);

bool satisfies(const ConstraintSystem& sys, const SolutionRow& row);

// Text format (one system per file):
//   var nsX 0 9
//   ineq |nsX + nsY - ntX - ntY| > k
//   geq k + nsX 5
//   parity k + nsX odd
//   eq nsX + nsY 6
//   cond l2 = 1 -> geq x + m3 + k2 6
//   order nsX + ntX >= nsY + ntY
ConstraintSystem parse_system(const std::string& text);
std::string format_system(const ConstraintSystem& sys);

// Golden table files: '#' comments, one row of integers per line.
std::vector<SolutionRow> parse_table(const std::string& text);
std::string format_table(const std::vector<SolutionRow>& rows);

}  // namespace trifree
