#include "cyq/multirat.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cyq/errors.hpp"

namespace cyq {

namespace {

using Factors = std::vector<MultiRat::Factor>;

// Scales p to leading coefficient 1, returning the scalar taken out.
Rational make_monic(MultiPoly &p)
{
    Rational lc = p.leading().second;
    if (!lc.is_one())
        p *= lc.inverse();
    return lc;
}

// Exact k-th root for polynomials that are perfect powers. Works term by term from
// the lex-leading term: lt(h^k) = lt(h)^k, and each next term of h is read off the
// leading term of the remainder g − h^k.
std::optional<MultiPoly> poly_root(const MultiPoly &g, int k)
{
    const auto &[lm, lc] = g.leading();
    std::array<int, kNumVars> e{};
    for (int v = 0; v < kNumVars; ++v) {
        if (lm.exponent(v) % k != 0)
            return std::nullopt;
        e[v] = lm.exponent(v) / k;
    }
    Rational c;
    try {
        c = exact_root(lc, static_cast<unsigned>(k));
    } catch (const std::domain_error &) {
        return std::nullopt;
    }
    MultiPoly lead = MultiPoly::monomial(c, Monomial::from_exponents(e));
    MultiPoly h = lead;
    MultiPoly denom = Rational(k) * lead.pow(k - 1);
    const auto &[dm, dc] = denom.leading();
    std::size_t limit = g.terms().size() + 1;
    for (std::size_t steps = 0; steps <= limit; ++steps) {
        MultiPoly r = g - h.pow(k);
        if (r.is_zero())
            return h;
        const auto &[rm, rc] = r.leading();
        auto m = divide(rm, dm);
        if (!m || rm > lm)
            return std::nullopt;
        h += MultiPoly::monomial(rc / dc, *m);
    }
    return std::nullopt;
}

void merge_into(Factors &fs, MultiPoly g, int e);

// Inserts a monic, non-constant, monomial-free factor.
void insert_factor(Factors &fs, MultiPoly g, int e)
{
    for (std::size_t i = 0; i < fs.size(); ++i) {
        auto &[f, fe] = fs[i];
        if (f == g) {
            fe += e;
            return;
        }
    }
    // split against existing factors in either direction
    for (std::size_t i = 0; i < fs.size(); ++i) {
        MultiPoly f = fs[i].first;
        int fe = fs[i].second;
        if (f.total_degree() < g.total_degree()) {
            if (auto q = divide_exact(g, f)) {
                fs[i].second += e;
                merge_into(fs, std::move(*q), e);
                return;
            }
        } else if (f.total_degree() > g.total_degree()) {
            if (auto q = divide_exact(f, g)) {
                fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
                merge_into(fs, std::move(*q), fe);
                merge_into(fs, std::move(g), e + fe);
                return;
            }
        }
    }
    int deg = g.total_degree();
    for (int k = deg; k >= 2; --k) {
        if (deg % k != 0)
            continue;
        if (auto h = poly_root(g, k)) {
            merge_into(fs, std::move(*h), e * k);
            return;
        }
    }
    fs.emplace_back(std::move(g), e);
}

// Adds g^e to the factor list, dropping its scalar; monomial parts become
// single-variable factors.
void merge_into(Factors &fs, MultiPoly g, int e)
{
    if (g.is_constant())
        return;
    Monomial m = g.monomial_content();
    if (m != Monomial()) {
        for (int v = 0; v < kNumVars; ++v)
            if (int k = m.exponent(v))
                insert_factor(fs, MultiPoly::var(v), e * k);
        g = g.divide_monomial(m);
        if (g.is_constant())
            return;
    }
    make_monic(g);
    insert_factor(fs, std::move(g), e);
}

MultiPoly product(const Factors &fs)
{
    MultiPoly r(1);
    for (const auto &[f, e] : fs)
        r = r * f.pow(e);
    return r;
}

} // namespace

MultiRat::MultiRat(const MultiPoly &num, const MultiPoly &den)
{
    if (den.is_zero())
        throw DivisionByZeroPolynomial("zero denominator");
    // every stored factor is monic, so the whole scalar is the leading coefficient
    num_ = num * den.leading().second.inverse();
    merge_into(den_, den, 1);
    cancel();
}

MultiPoly MultiRat::den() const
{
    return product(den_);
}

void MultiRat::cancel()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto &[f, e] : den_) {
        while (e > 0) {
            auto q = divide_exact(num_, f);
            if (!q)
                break;
            num_ = std::move(*q);
            --e;
        }
    }
    std::erase_if(den_, [](const Factor &f) { return f.second == 0; });
}

MultiRat operator*(const MultiRat &a, const MultiRat &b)
{
    MultiRat r;
    r.num_ = a.num_ * b.num_;
    if (r.num_.is_zero())
        return r;
    r.den_ = a.den_;
    for (const auto &[f, e] : b.den_)
        merge_into(r.den_, f, e);
    r.cancel();
    return r;
}

MultiRat operator+(const MultiRat &a, const MultiRat &b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_.empty() && b.den_.empty())
        return MultiRat(a.num_ + b.num_);
    // lcm of the two factor lists; bring both factor sets onto a common basis first
    Factors common = a.den_;
    for (const auto &[f, e] : b.den_)
        merge_into(common, f, 0);
    auto exponent_in = [](const Factors &basis, const Factors &fs) {
        // exponents of fs rewritten over `basis` (each basis entry is a factor of the lcm)
        std::vector<int> out(basis.size(), 0);
        for (const auto &[f, e] : fs) {
            MultiPoly rest = f;
            for (std::size_t i = 0; i < basis.size() && !rest.is_constant(); ++i) {
                while (!rest.is_constant()) {
                    auto q = divide_exact(rest, basis[i].first);
                    if (!q)
                        break;
                    rest = std::move(*q);
                    out[i] += e;
                }
            }
        }
        return out;
    };
    std::vector<int> ea = exponent_in(common, a.den_), eb = exponent_in(common, b.den_);
    MultiPoly ma(1), mb(1);
    MultiRat r;
    for (std::size_t i = 0; i < common.size(); ++i) {
        int m = std::max(ea[i], eb[i]);
        if (m == 0)
            continue;
        if (m > ea[i])
            ma = ma * common[i].first.pow(m - ea[i]);
        if (m > eb[i])
            mb = mb * common[i].first.pow(m - eb[i]);
        r.den_.emplace_back(common[i].first, m);
    }
    r.num_ = a.num_ * ma + b.num_ * mb;
    r.cancel();
    return r;
}

MultiRat operator-(const MultiRat &a, const MultiRat &b)
{
    return a + (-b);
}

MultiRat MultiRat::operator-() const
{
    MultiRat r = *this;
    r.num_ = -r.num_;
    return r;
}

MultiRat MultiRat::inverse() const
{
    if (num_.is_zero())
        throw DivisionByZeroPolynomial("inverse of zero");
    MultiRat r(den(), num_);
    return r;
}

MultiRat operator/(const MultiRat &a, const MultiRat &b)
{
    return a * b.inverse();
}

MultiRat MultiRat::pow(int e) const
{
    if (e < 0)
        return inverse().pow(-e);
    MultiRat r(1), base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

MultiRat MultiRat::derivative(int v) const
{
    // d(n / ∏ f^e) = (n'·∏f − n·Σ e_i f_i' ∏_{j≠i} f_j) / (D·∏f)
    MultiPoly all(1);
    for (const auto &[f, e] : den_)
        all = all * f;
    MultiPoly top = num_.derivative(v) * all;
    for (std::size_t i = 0; i < den_.size(); ++i) {
        MultiPoly fd = den_[i].first.derivative(v);
        if (fd.is_zero())
            continue;
        MultiPoly others(1);
        for (std::size_t j = 0; j < den_.size(); ++j)
            if (j != i)
                others = others * den_[j].first;
        top -= num_ * fd * others * Rational(den_[i].second);
    }
    MultiRat r;
    r.num_ = std::move(top);
    r.den_ = den_;
    for (auto &[f, e] : r.den_)
        ++e;
    r.cancel();
    return r;
}

Rational MultiRat::evaluate(std::span<const Rational> point) const
{
    Rational d(1);
    for (const auto &[f, e] : den_)
        d *= f.evaluate(point).pow(e);
    if (d.is_zero())
        throw DivisionByZeroPolynomial("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

MultiRat MultiRat::substitute(const std::array<std::optional<MultiRat>, kNumVars> &values) const
{
    auto subst_poly = [&](const MultiPoly &p) {
        std::map<std::pair<int, int>, MultiRat> powers;
        auto power = [&](int v, int e) -> const MultiRat & {
            auto it = powers.find({v, e});
            if (it == powers.end())
                it = powers.emplace(std::pair{v, e}, values[v]->pow(e)).first;
            return it->second;
        };
        MultiRat out;
        for (const auto &[m, c] : p.terms()) {
            std::array<int, kNumVars> kept{};
            MultiRat t(c);
            for (int v = 0; v < kNumVars; ++v) {
                int e = m.exponent(v);
                if (e == 0)
                    continue;
                if (values[v])
                    t = t * power(v, e);
                else
                    kept[v] = e;
            }
            out += t * MultiRat(MultiPoly::monomial(Rational(1), Monomial::from_exponents(kept)));
        }
        return out;
    };
    MultiRat r = subst_poly(num_);
    for (const auto &[f, e] : den_)
        r = r / subst_poly(f).pow(e);
    return r;
}

std::string MultiRat::str() const
{
    if (den_.empty())
        return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(";
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (i)
            os << "*";
        os << "(" << den_[i].first.str() << ")";
        if (den_[i].second != 1)
            os << "^" << den_[i].second;
    }
    os << ")";
    return os.str();
}

} // namespace cyq
