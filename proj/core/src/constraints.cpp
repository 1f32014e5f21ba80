#include "trifree/constraints.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace trifree {

LinExpr& LinExpr::add(int var, int coef) {
    for (auto& [v, c] : terms)
        if (v == var) { c += coef; return *this; }
    terms.push_back({var, coef});
    return *this;
}

int ConstraintSystem::add_var(const std::string& name, int lo_, int hi_) {
    if (lo_ > hi_) throw std::invalid_argument("empty domain for " + name);
    var_names.push_back(name);
    lo.push_back(lo_);
    hi.push_back(hi_);
    return static_cast<int>(var_names.size()) - 1;
}

int ConstraintSystem::var(const std::string& name) const {
    for (size_t i = 0; i < var_names.size(); ++i)
        if (var_names[i] == name) return static_cast<int>(i);
    return -1;
}

LinExpr ConstraintSystem::expr(std::initializer_list<const char*> names, int constant) const {
    LinExpr e;
    e.constant = constant;
    for (const char* n : names) {
        int v = var(n);
        if (v < 0) throw std::invalid_argument(std::string("unknown variable ") + n);
        e.add(v);
    }
    return e;
}

void ConstraintSystem::linear(LinExpr lhs, Rel rel, LinExpr rhs) {
    Constraint c;
    c.type = Constraint::Linear;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.rel = rel;
    constraints.push_back(std::move(c));
}

void ConstraintSystem::abs_gt(LinExpr lhs, LinExpr rhs) {
    Constraint c;
    c.type = Constraint::AbsGt;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    constraints.push_back(std::move(c));
}

void ConstraintSystem::parity(LinExpr e, bool odd) {
    Constraint c;
    c.type = Constraint::Parity;
    c.lhs = std::move(e);
    c.odd = odd;
    constraints.push_back(std::move(c));
}

void ConstraintSystem::conditional(LinExpr guard, int bound, Constraint then) {
    Constraint c;
    c.type = Constraint::Conditional;
    c.rel = Rel::Eq;  // guard == bound; builders needing ">=" set rel after
    c.guard = std::move(guard);
    c.guard_bound = bound;
    c.then_constraints.push_back(std::move(then));
    constraints.push_back(std::move(c));
}

namespace {

struct Interval {
    long long lo, hi;
};

Interval eval(const LinExpr& e, const std::vector<int>& val, int assigned,
              const std::vector<int>& lo, const std::vector<int>& hi) {
    Interval r{e.constant, e.constant};
    for (auto [v, c] : e.terms) {
        if (v < assigned) {
            r.lo += static_cast<long long>(c) * val[v];
            r.hi += static_cast<long long>(c) * val[v];
        } else if (c >= 0) {
            r.lo += static_cast<long long>(c) * lo[v];
            r.hi += static_cast<long long>(c) * hi[v];
        } else {
            r.lo += static_cast<long long>(c) * hi[v];
            r.hi += static_cast<long long>(c) * lo[v];
        }
    }
    return r;
}

// Conservative feasibility: must return true whenever some completion of the
// prefix satisfies the constraint; exact on full assignments.
bool feasible(const Constraint& c, const std::vector<int>& val, int assigned,
              const std::vector<int>& lo, const std::vector<int>& hi) {
    switch (c.type) {
        case Constraint::Linear: {
            Interval l = eval(c.lhs, val, assigned, lo, hi);
            Interval r = eval(c.rhs, val, assigned, lo, hi);
            long long dmin = l.lo - r.hi, dmax = l.hi - r.lo;
            switch (c.rel) {
                case Rel::Eq: return dmin <= 0 && dmax >= 0;
                case Rel::Le: return dmin <= 0;
                case Rel::Lt: return dmin < 0;
                case Rel::Ge: return dmax >= 0;
                case Rel::Gt: return dmax > 0;
            }
            return true;
        }
        case Constraint::AbsGt: {
            Interval l = eval(c.lhs, val, assigned, lo, hi);
            Interval r = eval(c.rhs, val, assigned, lo, hi);
            long long maxabs = std::max(std::llabs(l.lo), std::llabs(l.hi));
            return maxabs > r.lo;
        }
        case Constraint::Parity: {
            Interval l = eval(c.lhs, val, assigned, lo, hi);
            if (l.lo != l.hi) return true;
            bool is_odd = ((l.lo % 2) + 2) % 2 == 1;
            return is_odd == c.odd;
        }
        case Constraint::Divisible: {
            Interval l = eval(c.lhs, val, assigned, lo, hi);
            if (l.lo != l.hi) return true;
            return ((l.lo % c.divisor) + c.divisor) % c.divisor == 0;
        }
        case Constraint::Conditional: {
            // Guard relation lives in c.rel: Eq means "guard == bound",
            // Ge means "guard >= bound".  Only a surely-true guard forces
            // the body; an undecided guard cannot prune.
            Interval gv = eval(c.guard, val, assigned, lo, hi);
            bool surely_true = c.rel == Rel::Ge
                                   ? gv.lo >= c.guard_bound
                                   : (gv.lo == gv.hi && gv.lo == c.guard_bound);
            if (!surely_true) return true;
            for (const Constraint& t : c.then_constraints)
                if (!feasible(t, val, assigned, lo, hi)) return false;
            return true;
        }
    }
    return true;
}

}  // namespace

bool satisfies(const ConstraintSystem& sys, const SolutionRow& row) {
    if (row.size() != sys.var_names.size()) return false;
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] < sys.lo[i] || row[i] > sys.hi[i]) return false;
    int k = static_cast<int>(row.size());
    std::vector<int> val(row.begin(), row.end());
    for (const Constraint& c : sys.constraints)
        if (!feasible(c, val, k, sys.lo, sys.hi)) return false;
    return true;
}

std::vector<SolutionRow> solve(const ConstraintSystem& sys, int jobs, bool reverse_order) {
    const int k = static_cast<int>(sys.var_names.size());

    auto run_range = [&](int first_lo, int first_hi, std::vector<SolutionRow>& out) {
        std::vector<int> val(k, 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == k) {
                out.push_back(val);
                return;
            }
            int a = sys.lo[i], b = sys.hi[i];
            if (i == 0) { a = first_lo; b = first_hi; }
            for (int t = 0; t <= b - a; ++t) {
                val[i] = reverse_order ? b - t : a + t;
                bool ok = true;
                for (const Constraint& c : sys.constraints)
                    if (!feasible(c, val, i + 1, sys.lo, sys.hi)) { ok = false; break; }
                if (ok) self(self, i + 1);
            }
        };
        rec(rec, 0);
    };

    std::vector<SolutionRow> rows;
    if (k == 0) return rows;
    if (jobs <= 1) {
        run_range(sys.lo[0], sys.hi[0], rows);
    } else {
        int span = sys.hi[0] - sys.lo[0] + 1;
        int workers = std::min(jobs, span);
        std::vector<std::vector<SolutionRow>> parts(workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            int a = sys.lo[0] + (span * w) / workers;
            int b = sys.lo[0] + (span * (w + 1)) / workers - 1;
            pool.emplace_back([&, a, b, w] { run_range(a, b, parts[w]); });
        }
        for (auto& t : pool) t.join();
        for (auto& p : parts) rows.insert(rows.end(), p.begin(), p.end());
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

// ---------------------------------------------------------------------------
// Text format.

namespace {

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> toks;
    size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
        if (s[i] == '|' || s[i] == '+') { toks.push_back(std::string(1, s[i])); ++i; continue; }
        if (s[i] == '-') {
            if (i + 1 < s.size() && s[i + 1] == '>') { toks.push_back("->"); i += 2; }
            else { toks.push_back("-"); ++i; }
            continue;
        }
        if (s[i] == '>' || s[i] == '<' || s[i] == '=') {
            if (i + 1 < s.size() && s[i + 1] == '=') { toks.push_back(s.substr(i, 2)); i += 2; }
            else { toks.push_back(std::string(1, s[i])); ++i; }
            continue;
        }
        size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            ++j;
        if (j == i) throw std::invalid_argument("bad character in system file: " + s);
        toks.push_back(s.substr(i, j - i));
        i = j;
    }
    return toks;
}

bool is_int(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// expr := ['-'] term (('+'|'-') term)*, term := int | name
LinExpr parse_expr(const ConstraintSystem& sys, const std::vector<std::string>& toks,
                   size_t& i, size_t end) {
    LinExpr e;
    int sign = 1;
    bool expect_term = true;
    while (i < end) {
        const std::string& t = toks[i];
        if (t == "+") { sign = 1; ++i; expect_term = true; continue; }
        if (t == "-") { sign = -1; ++i; expect_term = true; continue; }
        if (!expect_term) break;
        if (is_int(t)) {
            e.constant += sign * std::stoi(t);
        } else {
            int v = sys.var(t);
            if (v < 0) throw std::invalid_argument("unknown variable " + t);
            e.add(v, sign);
        }
        sign = 1;
        expect_term = false;
        ++i;
    }
    return e;
}

size_t find_tok(const std::vector<std::string>& toks, size_t from,
                std::initializer_list<const char*> what) {
    for (size_t i = from; i < toks.size(); ++i)
        for (const char* w : what)
            if (toks[i] == w) return i;
    return toks.size();
}

Constraint parse_statement(const ConstraintSystem& sys,
                           const std::vector<std::string>& toks, size_t i, size_t end);

Constraint parse_relational(const ConstraintSystem& sys, const std::string& head,
                            const std::vector<std::string>& toks, size_t i, size_t end) {
    Constraint c;
    c.type = Constraint::Linear;
    size_t split = find_tok(toks, i, {">=", "<=", ">", "<", "="});
    if (split < end) {
        // explicit comparator overrides the keyword
        const std::string& op = toks[split];
        size_t p = i;
        c.lhs = parse_expr(sys, toks, p, split);
        p = split + 1;
        c.rhs = parse_expr(sys, toks, p, end);
        c.rel = op == ">=" ? Rel::Ge : op == "<=" ? Rel::Le
              : op == ">" ? Rel::Gt : op == "<" ? Rel::Lt : Rel::Eq;
        return c;
    }
    // keyword form: "geq <expr> <int>" -- the trailing integer is the rhs
    if (end == i) throw std::invalid_argument("empty constraint");
    if (!is_int(toks[end - 1]))
        throw std::invalid_argument("expected trailing integer bound");
    size_t p = i;
    c.lhs = parse_expr(sys, toks, p, end - 1);
    c.rhs.constant = std::stoi(toks[end - 1]);
    c.rel = head == "geq" ? Rel::Ge : head == "leq" ? Rel::Le
          : head == "gt" ? Rel::Gt : head == "lt" ? Rel::Lt : Rel::Eq;
    return c;
}

Constraint parse_statement(const ConstraintSystem& sys,
                           const std::vector<std::string>& toks, size_t i, size_t end) {
    const std::string head = toks[i];
    ++i;
    if (head == "ineq") {
        // ineq |expr| > expr
        if (toks[i] != "|") throw std::invalid_argument("ineq expects |expr| > expr");
        size_t close = find_tok(toks, i + 1, {"|"});
        Constraint c;
        c.type = Constraint::AbsGt;
        size_t p = i + 1;
        c.lhs = parse_expr(sys, toks, p, close);
        if (toks[close + 1] != ">") throw std::invalid_argument("ineq expects '>'");
        p = close + 2;
        c.rhs = parse_expr(sys, toks, p, end);
        return c;
    }
    if (head == "parity") {
        Constraint c;
        c.type = Constraint::Parity;
        size_t p = i;
        c.lhs = parse_expr(sys, toks, p, end - 1);
        const std::string& tag = toks[end - 1];
        if (tag != "odd" && tag != "even")
            throw std::invalid_argument("parity expects odd|even");
        c.odd = tag == "odd";
        return c;
    }
    if (head == "div") {
        Constraint c;
        c.type = Constraint::Divisible;
        size_t p = i;
        c.lhs = parse_expr(sys, toks, p, end - 1);
        c.divisor = std::stoi(toks[end - 1]);
        return c;
    }
    if (head == "geq" || head == "leq" || head == "gt" || head == "lt" ||
        head == "eq" || head == "order")
        return parse_relational(sys, head == "order" ? "geq" : head, toks, i, end);
    throw std::invalid_argument("unknown constraint keyword " + head);
}

}  // namespace

ConstraintSystem parse_system(const std::string& text) {
    ConstraintSystem sys;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "system") {
            sys.id = toks[1];
            continue;
        }
        if (toks[0] == "var") {
            if (toks.size() == 4 && is_int(toks[2]) && is_int(toks[3]))
                sys.add_var(toks[1], std::stoi(toks[2]), std::stoi(toks[3]));
            else if (toks.size() == 5 && toks[2] == "-" && is_int(toks[3]))
                sys.add_var(toks[1], -std::stoi(toks[3]), std::stoi(toks[4]));
            else
                throw std::invalid_argument("bad var line: " + line);
            continue;
        }
        if (toks[0] == "cond") {
            size_t arrow = find_tok(toks, 0, {"->"});
            if (arrow == toks.size())
                throw std::invalid_argument("cond expects '->': " + line);
            size_t op = find_tok(toks, 1, {"=", ">="});
            if (op >= arrow) throw std::invalid_argument("cond guard needs = or >=");
            Constraint c;
            c.type = Constraint::Conditional;
            size_t p = 1;
            c.guard = parse_expr(sys, toks, p, op);
            c.guard_bound = std::stoi(toks[op + 1]);
            if (toks[op] == ">=") {
                // rewrite "guard >= b" as equality on a clamped witness: keep
                // semantics by storing bound and flagging via rel on guard
                c.rel = Rel::Ge;
            } else {
                c.rel = Rel::Eq;
            }
            c.then_constraints.push_back(
                parse_statement(sys, toks, arrow + 1, toks.size()));
            sys.constraints.push_back(std::move(c));
            continue;
        }
        sys.constraints.push_back(parse_statement(sys, toks, 0, toks.size()));
    }
    return sys;
}

namespace {

std::string expr_str(const ConstraintSystem& sys, const LinExpr& e) {
    std::ostringstream out;
    bool first = true;
    for (auto [v, c] : e.terms) {
        for (int t = 0; t < std::abs(c); ++t) {
            if (!first) out << (c > 0 ? " + " : " - ");
            else if (c < 0) out << "- ";
            out << sys.var_names[v];
            first = false;
        }
    }
    if (e.constant != 0 || first) {
        if (!first) out << (e.constant >= 0 ? " + " : " - ");
        else if (e.constant < 0) out << "- ";
        out << std::abs(e.constant);
    }
    return out.str();
}

std::string stmt_str(const ConstraintSystem& sys, const Constraint& c) {
    std::ostringstream out;
    switch (c.type) {
        case Constraint::Linear: {
            const char* kw = c.rel == Rel::Eq ? "eq" : c.rel == Rel::Ge ? "geq"
                           : c.rel == Rel::Le ? "leq" : c.rel == Rel::Gt ? "gt" : "lt";
            const char* op = c.rel == Rel::Eq ? "=" : c.rel == Rel::Ge ? ">="
                           : c.rel == Rel::Le ? "<=" : c.rel == Rel::Gt ? ">" : "<";
            out << kw << ' ' << expr_str(sys, c.lhs) << ' ' << op << ' '
                << expr_str(sys, c.rhs);
            break;
        }
        case Constraint::AbsGt:
            out << "ineq |" << expr_str(sys, c.lhs) << "| > " << expr_str(sys, c.rhs);
            break;
        case Constraint::Parity:
            out << "parity " << expr_str(sys, c.lhs) << (c.odd ? " odd" : " even");
            break;
        case Constraint::Divisible:
            out << "div " << expr_str(sys, c.lhs) << ' ' << c.divisor;
            break;
        case Constraint::Conditional:
            out << "cond " << expr_str(sys, c.guard)
                << (c.rel == Rel::Ge ? " >= " : " = ") << c.guard_bound << " -> "
                << stmt_str(sys, c.then_constraints.front());
            break;
    }
    return out.str();
}

}  // namespace

std::string format_system(const ConstraintSystem& sys) {
    std::ostringstream out;
    if (!sys.id.empty()) out << "system " << sys.id << '\n';
    for (size_t i = 0; i < sys.var_names.size(); ++i)
        out << "var " << sys.var_names[i] << ' ' << sys.lo[i] << ' ' << sys.hi[i]
            << '\n';
    for (const Constraint& c : sys.constraints) {
        std::string s = stmt_str(sys, c);
        out << s << '\n';
    }
    return out.str();
}

std::vector<SolutionRow> parse_table(const std::string& text) {
    std::vector<SolutionRow> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        SolutionRow row;
        int x;
        while (ls >> x) row.push_back(x);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_table(const std::vector<SolutionRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace trifree
