#include "cyq/ode.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "cyq/errors.hpp"
#include "cyq/matrix.hpp"
#include "cyq/upoly.hpp"

namespace cyq {

namespace {

using Assignment = std::vector<std::optional<Rational>>;

MultiPoly substitute_known(const MultiPoly &p, const Assignment &vals)
{
    std::array<std::optional<MultiPoly>, kNumVars> sub;
    for (std::size_t v = 0; v < vals.size(); ++v)
        if (vals[v])
            sub[v] = MultiPoly(*vals[v]);
    return p.substitute(sub);
}

// p must only involve variable v.
UPoly to_upoly(const MultiPoly &p, int v)
{
    std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree(v), 0)) + 1);
    for (const auto &[m, coef] : p.terms())
        c[static_cast<std::size_t>(m.exponent(v))] += coef;
    return UPoly(std::move(c));
}

std::string coeff_name(const VectorFieldInstance &sys, int var, int order)
{
    return sys.var_names[static_cast<std::size_t>(var)] + "," + std::to_string(order);
}

// Closes the order-0 system num_i(t_{·,0}) = 0 under single-unknown elimination,
// branching over rational roots when an equation is nonlinear in its unknown.
void close_order0(const VectorFieldInstance &sys, Assignment vals, std::vector<Assignment> &out)
{
    for (;;) {
        bool progress = false;
        for (const auto &eq : sys.eqs) {
            MultiPoly p = substitute_known(eq.num, vals);
            if (p.is_zero())
                continue;
            auto vars = p.variables();
            if (vars.empty())
                return; // a nonzero constant: inconsistent
            if (vars.size() != 1)
                continue;
            int u = vars[0];
            UPoly up = to_upoly(p, u);
            if (up.degree() == 1) {
                vals[static_cast<std::size_t>(u)] = -up.coeff(0) / up.coeff(1);
                progress = true;
                continue;
            }
            for (const auto &root : rational_roots(up)) {
                Assignment next = vals;
                next[static_cast<std::size_t>(u)] = root;
                close_order0(sys, std::move(next), out);
            }
            return;
        }
        if (!progress)
            break;
    }
    out.push_back(std::move(vals));
}

bool order0_consistent(const VectorFieldInstance &sys, const Assignment &vals)
{
    for (const auto &eq : sys.eqs) {
        MultiPoly p = substitute_known(eq.num, vals);
        if (p.variables().empty() && !p.is_zero())
            return false;
    }
    return true;
}

struct Order1System {
    // rows: equations; columns: unknowns in `cols` order, then the right-hand side
    std::vector<std::vector<UPoly>> aug;
    std::vector<int> cols;
};

// Order-1 coefficient of den_i·θ(t_i) − num_i is λ·den_i(0)·t_{i,1} − Σ_j ∂num_i/∂t_j(0)·t_{j,1}.
// Entries are polynomials in the (at most one) free order-0 parameter `param`.
Order1System order1_system(const VectorFieldInstance &sys, const Assignment &order0,
                           const std::vector<std::optional<Rational>> &pins1, int param)
{
    int n = sys.n_vars();
    Order1System s;
    for (int j = 0; j < n; ++j)
        if (!pins1[static_cast<std::size_t>(j)])
            s.cols.push_back(j);
    auto as_upoly = [&](const MultiPoly &p) {
        MultiPoly q = substitute_known(p, order0);
        return param < 0 ? UPoly(q.constant_term()) : to_upoly(q, param);
    };
    for (int i = 0; i < n; ++i) {
        const auto &eq = sys.eqs[static_cast<std::size_t>(i)];
        std::vector<UPoly> coeff(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            coeff[static_cast<std::size_t>(j)] = -as_upoly(eq.num.derivative(j));
        coeff[static_cast<std::size_t>(i)] += as_upoly(eq.den) * UPoly(sys.lambda);
        std::vector<UPoly> row;
        UPoly rhs;
        for (int j = 0; j < n; ++j) {
            if (auto pin = pins1[static_cast<std::size_t>(j)])
                rhs -= coeff[static_cast<std::size_t>(j)] * UPoly(*pin);
            else
                row.push_back(coeff[static_cast<std::size_t>(j)]);
        }
        row.push_back(rhs);
        s.aug.push_back(std::move(row));
    }
    return s;
}

QMatrix at(const Order1System &s, const Rational &x)
{
    int r = static_cast<int>(s.aug.size()), c = static_cast<int>(s.cols.size()) + 1;
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m(i, j) = s.aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](x);
    return m;
}

// det of the square augmented matrix as a polynomial in the parameter, by interpolation.
UPoly consistency_polynomial(const Order1System &s)
{
    int bound = 0;
    for (const auto &row : s.aug) {
        int d = 0;
        for (const auto &e : row)
            d = std::max(d, e.degree());
        bound += d;
    }
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        xs.emplace_back(k);
        ys.push_back(det(at(s, Rational(k))));
    }
    return interpolate(xs, ys);
}

// Fills in the order-1 values fixed by the numeric system; returns false when inconsistent.
bool solve_order1(const Order1System &s, const Rational &x, Branch &b)
{
    QMatrix m = at(s, x);
    int unknowns = static_cast<int>(s.cols.size());
    Rref r = rref(m);
    if (!r.pivots.empty() && r.pivots.back() == unknowns)
        return false;
    b.order1_rank = static_cast<int>(r.pivots.size());
    b.order1_unknowns = unknowns;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
        int row = static_cast<int>(k), pc = r.pivots[k];
        bool determined = true;
        for (int j = pc + 1; j < unknowns; ++j)
            if (!r.m(row, j).is_zero())
                determined = false;
        if (determined)
            b.order1[static_cast<std::size_t>(s.cols[static_cast<std::size_t>(pc)])] = r.m(row, unknowns);
    }
    return true;
}

void finish_branch(const VectorFieldInstance &sys, const SeedData &seed, Branch &b)
{
    for (const auto &eq : sys.eqs) {
        MultiPoly d = substitute_known(eq.den, b.order0);
        if (d.variables().empty() && d.is_zero())
            b.degenerate = true;
    }
    for (int v : seed.nonzero_order0) {
        const auto &val = b.order0[static_cast<std::size_t>(v)];
        if (!val || val->is_zero())
            b.admissible = false;
    }
}

} // namespace

BranchAnalysis solve_branch_constraints(const VectorFieldInstance &sys, const SeedData &seed)
{
    int n = sys.n_vars();
    Assignment start(static_cast<std::size_t>(n));
    std::vector<std::optional<Rational>> pins1(static_cast<std::size_t>(n));
    for (const auto &p : seed.pins) {
        if (p.var < 0 || p.var >= n)
            throw NoConsistentBranch("pin on unknown variable index " + std::to_string(p.var));
        if (p.order == 0)
            start[static_cast<std::size_t>(p.var)] = p.value;
        else if (p.order == 1)
            pins1[static_cast<std::size_t>(p.var)] = p.value;
        else
            throw NoConsistentBranch("pins are only accepted at orders 0 and 1");
    }

    std::vector<Assignment> partial;
    close_order0(sys, start, partial);

    BranchAnalysis out;
    bool first = true;
    for (const auto &vals : partial) {
        std::vector<int> free;
        for (int v = 0; v < n; ++v)
            if (!vals[static_cast<std::size_t>(v)])
                free.push_back(v);
        if (first)
            out.free_after_order0 = free;
        first = false;
        if (free.size() > 1)
            throw UnsupportedSystem("more than one order-0 coefficient left free: " +
                                    coeff_name(sys, free[0], 0) + ", " + coeff_name(sys, free[1], 0));
        int param = free.empty() ? -1 : free[0];
        Order1System s = order1_system(sys, vals, pins1, param);

        std::vector<std::optional<Rational>> candidates;
        if (param < 0) {
            candidates.push_back(std::nullopt);
        } else if (s.aug.size() == s.cols.size() + 1) {
            UPoly cp = consistency_polynomial(s);
            if (cp.is_zero())
                candidates.push_back(std::nullopt); // parameter stays free
            else
                for (const auto &root : rational_roots(cp))
                    candidates.push_back(root);
        } else {
            throw UnsupportedSystem("order-1 system is not square after pinning");
        }

        for (const auto &cand : candidates) {
            Branch b;
            b.order0 = vals;
            b.order1 = pins1;
            if (cand) {
                b.order0[static_cast<std::size_t>(param)] = *cand;
                if (!order0_consistent(sys, b.order0))
                    continue;
                if (!solve_order1(s, *cand, b))
                    continue;
            } else if (param < 0) {
                if (!solve_order1(s, Rational(0), b))
                    continue;
            } else {
                b.order1_unknowns = static_cast<int>(s.cols.size());
            }
            finish_branch(sys, seed, b);
            out.branches.push_back(std::move(b));
        }
    }
    if (out.branches.empty())
        throw NoConsistentBranch("the pinned values admit no order-0/order-1 solution");
    return out;
}

SeriesSolution SeriesSolution::truncate(int n) const
{
    SeriesSolution s = *this;
    for (auto &x : s.series)
        x = x.truncate(n);
    return s;
}

namespace {

// Incremental evaluation of all monomials occurring in the system. Node k is
// parent·t_var; its coefficient at q^n is Σ_j parent[j]·t_var[n−j].
class MonomialEvaluator {
public:
    MonomialEvaluator(const std::vector<std::vector<Rational>> &t) : t_(t)
    {
        nodes_.push_back({-1, -1, {}});
        index_[Monomial().bits()] = 0;
    }

    int intern(Monomial m)
    {
        auto it = index_.find(m.bits());
        if (it != index_.end())
            return it->second;
        int v = 0;
        while (m.exponent(v) == 0)
            ++v;
        int parent = intern(*divide(m, Monomial::var(v)));
        nodes_.push_back({parent, v, {}});
        int id = static_cast<int>(nodes_.size()) - 1;
        index_[m.bits()] = id;
        return id;
    }

    // Appends coefficient n (= current length) to every node.
    void extend()
    {
        for (auto &node : nodes_)
            node.c.push_back(coefficient(node, static_cast<int>(node.c.size())));
    }
    // Recomputes the last coefficient after t's top coefficients changed.
    void refresh_last()
    {
        for (auto &node : nodes_) {
            int n = static_cast<int>(node.c.size()) - 1;
            node.c.back() = coefficient(node, n);
        }
    }

    const Rational &at(int id, int n) const { return nodes_[static_cast<std::size_t>(id)].c[static_cast<std::size_t>(n)]; }

private:
    struct Node {
        int parent;
        int var;
        std::vector<Rational> c;
    };
    Rational coefficient(const Node &node, int n) const
    {
        if (node.parent < 0)
            return Rational(n == 0 ? 1 : 0);
        const auto &pc = nodes_[static_cast<std::size_t>(node.parent)].c;
        const auto &tv = t_[static_cast<std::size_t>(node.var)];
        Rational acc;
        for (int j = 0; j <= n; ++j) {
            const Rational &a = pc[static_cast<std::size_t>(j)];
            const Rational &b = tv[static_cast<std::size_t>(n - j)];
            if (!a.is_zero() && !b.is_zero())
                acc += a * b;
        }
        return acc;
    }

    const std::vector<std::vector<Rational>> &t_;
    std::vector<Node> nodes_;
    std::unordered_map<std::uint64_t, int> index_;
};

struct LinearForm {
    std::vector<std::pair<int, Rational>> terms; // (node id, coefficient)
};

LinearForm compile(const MultiPoly &p, MonomialEvaluator &ev)
{
    LinearForm f;
    for (const auto &[m, c] : p.terms())
        f.terms.emplace_back(ev.intern(m), c);
    return f;
}

Rational eval_at(const LinearForm &f, const MonomialEvaluator &ev, int n)
{
    Rational acc;
    for (const auto &[id, c] : f.terms)
        acc += c * ev.at(id, n);
    return acc;
}

} // namespace

SeriesSolution solve_qseries(const VectorFieldInstance &sys, const Branch &branch, int order)
{
    if (order < 0)
        throw std::invalid_argument("solve_qseries: negative order");
    int nv = sys.n_vars();
    if (branch.degenerate)
        throw DegenerateBranch("a denominator vanishes at order 0, the recursion for n >= 2 is undefined");
    for (int v = 0; v < nv; ++v) {
        if (!branch.order0[static_cast<std::size_t>(v)])
            throw NoConsistentBranch(coeff_name(sys, v, 0) + " is undetermined on this branch");
        if (!branch.order1[static_cast<std::size_t>(v)])
            throw NoConsistentBranch(coeff_name(sys, v, 1) + " is undetermined on this branch");
    }

    std::vector<std::vector<Rational>> t(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
        t[static_cast<std::size_t>(v)].push_back(*branch.order0[static_cast<std::size_t>(v)]);
        t[static_cast<std::size_t>(v)].push_back(*branch.order1[static_cast<std::size_t>(v)]);
    }
    MonomialEvaluator ev(t);
    std::vector<LinearForm> dens, nums;
    for (const auto &eq : sys.eqs) {
        dens.push_back(compile(eq.den, ev));
        nums.push_back(compile(eq.num, ev));
    }
    ev.extend();
    ev.extend();

    // linear part at order n: λ·n·den_i(0)·δ_ij − ∂num_i/∂t_j(0)
    QMatrix jac(nv, nv);
    std::vector<Rational> den0(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        den0[static_cast<std::size_t>(i)] = eval_at(dens[static_cast<std::size_t>(i)], ev, 0);
        for (int j = 0; j < nv; ++j)
            jac(i, j) = substitute_known(sys.eqs[static_cast<std::size_t>(i)].num.derivative(j), branch.order0).constant_term();
    }

    for (int n = 2; n <= order; ++n) {
        for (auto &tv : t)
            tv.emplace_back(0);
        ev.extend();
        QMatrix aug(nv, nv + 1);
        for (int i = 0; i < nv; ++i) {
            const auto &ti = t[static_cast<std::size_t>(i)];
            Rational r;
            for (int k = 0; k <= n; ++k) {
                const Rational &tk = ti[static_cast<std::size_t>(n - k)];
                if (!tk.is_zero())
                    r += eval_at(dens[static_cast<std::size_t>(i)], ev, k) * sys.lambda * Rational(n - k) * tk;
            }
            r -= eval_at(nums[static_cast<std::size_t>(i)], ev, n);
            for (int j = 0; j < nv; ++j)
                aug(i, j) = -jac(i, j);
            aug(i, i) += sys.lambda * Rational(n) * den0[static_cast<std::size_t>(i)];
            aug(i, nv) = -r;
        }
        Rref rr = rref(aug);
        if (static_cast<int>(rr.pivots.size()) != nv || rr.pivots.back() != nv - 1)
            throw SingularOrderSystem("the linear system at order " + std::to_string(n) + " is singular");
        for (int i = 0; i < nv; ++i)
            t[static_cast<std::size_t>(i)].back() = rr.m(i, nv);
        ev.refresh_last();
    }

    SeriesSolution sol;
    sol.system = sys.name;
    sol.names = sys.var_names;
    for (auto &tv : t) {
        tv.resize(static_cast<std::size_t>(order) + 1);
        sol.series.emplace_back(std::move(tv));
    }
    return sol;
}

SeriesSolution solve_default(const VectorFieldInstance &sys, int order)
{
    BranchAnalysis a = solve_branch_constraints(sys, default_seed(sys));
    const Branch *chosen = nullptr;
    for (const auto &b : a.branches)
        if (b.admissible && !b.degenerate) {
            if (chosen)
                throw NoConsistentBranch("the default seed leaves more than one admissible branch");
            chosen = &b;
        }
    if (!chosen)
        throw NoConsistentBranch("no admissible branch for the default seed");
    return solve_qseries(sys, *chosen, order);
}

QSeries evaluate(const MultiPoly &p, const std::vector<QSeries> &vals)
{
    int order = vals.front().order();
    std::map<std::pair<int, int>, QSeries> powers;
    QSeries out(order);
    for (const auto &[m, c] : p.terms()) {
        QSeries term = QSeries::constant(c, order);
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.exponent(v);
            if (e == 0)
                continue;
            auto it = powers.find({v, e});
            if (it == powers.end())
                it = powers.emplace(std::pair{v, e}, pow(vals[static_cast<std::size_t>(v)], static_cast<unsigned>(e))).first;
            term *= it->second;
        }
        out += term;
    }
    return out;
}

bool ResidualReport::clean() const
{
    return std::all_of(first_nonzero.begin(), first_nonzero.end(), [](int k) { return k < 0; });
}

ResidualReport residual_check(const VectorFieldInstance &sys, const SeriesSolution &sol)
{
    ResidualReport rep;
    rep.order = sol.order();
    for (int i = 0; i < sys.n_vars(); ++i) {
        const auto &eq = sys.eqs[static_cast<std::size_t>(i)];
        QSeries res = evaluate(eq.den, sol.series) * theta(sol[i], sys.lambda) - evaluate(eq.num, sol.series);
        rep.first_nonzero.push_back(res.valuation());
    }
    return rep;
}

HomogeneityReport check_weighted_homogeneity(const VectorFieldInstance &sys)
{
    HomogeneityReport rep;
    MultiPoly lam = MultiPoly::var(kAuxVar);
    for (int i = 0; i < sys.n_vars(); ++i) {
        const auto &eq = sys.eqs[static_cast<std::size_t>(i)];
        MultiPoly lhs = eq.num.scale_by_weights(sys.weights) * eq.den;
        MultiPoly rhs = lam.pow(sys.weights[static_cast<std::size_t>(i)] + sys.theta_weight) * eq.num *
                        eq.den.scale_by_weights(sys.weights);
        bool ok = lhs == rhs;
        rep.per_equation.push_back(ok);
        rep.homogeneous = rep.homogeneous && ok;
    }
    return rep;
}

} // namespace cyq
