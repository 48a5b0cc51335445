#include "comax/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace comax {

IntegerPolynomial::IntegerPolynomial(std::vector<mpz_class> coefficients)
    : c_(std::move(coefficients))
{
    trim();
}

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coefficients)
{
    c_.reserve(coefficients.size());
    for (long v : coefficients)
        c_.emplace_back(v);
    trim();
}

IntegerPolynomial IntegerPolynomial::linear(const mpz_class& r)
{
    return IntegerPolynomial(std::vector<mpz_class>{-r, 1});
}

void IntegerPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

mpz_class IntegerPolynomial::evaluate(const mpz_class& x) const
{
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpq_class IntegerPolynomial::evaluate(const mpq_class& x) const
{
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntegerPolynomial IntegerPolynomial::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntegerPolynomial(std::move(d));
}

IntegerPolynomial IntegerPolynomial::pow(unsigned k) const
{
    IntegerPolynomial result = one();
    IntegerPolynomial base = *this;
    while (k > 0) {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k > 0)
            base = base * base;
    }
    return result;
}

IntegerPolynomial IntegerPolynomial::with_roots_shifted(const mpz_class& a) const
{
    // Horner in the basis of powers of (x - a).
    std::vector<mpz_class> q;
    q.reserve(c_.size());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // q <- q * (x - a) + c
        q.insert(q.begin(), mpz_class(0));
        for (std::size_t i = 0; i + 1 < q.size(); ++i)
            q[i] -= a * q[i + 1];
        q[0] += *it;
    }
    return IntegerPolynomial(std::move(q));
}

std::pair<IntegerPolynomial, mpz_class> IntegerPolynomial::divide_linear(const mpz_class& r) const
{
    if (c_.empty())
        return {{}, 0};
    std::vector<mpz_class> q(c_.size() - 1);
    mpz_class carry = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        carry = carry * r + c_[i];
        if (i > 0)
            q[i - 1] = carry;
    }
    return {IntegerPolynomial(std::move(q)), carry};
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b)
{
    if (a.c_.empty() || b.c_.empty())
        return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntegerPolynomial(std::move(r));
}

std::string IntegerPolynomial::to_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpz_class& c = c_[i];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0)
                os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0)
            os << mag.get_str();
        if (i >= 1)
            os << 'x';
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Integer roots

namespace {

double log2_abs(const mpz_class& v)
{
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return static_cast<double>(exp) + std::log2(std::fabs(mant));
}

IntegerRootSplit strip_zero_roots(const IntegerPolynomial& p)
{
    if (!p.is_monic())
        throw std::invalid_argument("extract_integer_roots: polynomial must be monic");
    const auto& c = p.coefficients();
    std::size_t k = 0;
    while (c[k] == 0)
        ++k;
    IntegerRootSplit out;
    if (k > 0)
        out.roots.push_back({0, static_cast<std::int64_t>(k)});
    out.residual = IntegerPolynomial(std::vector<mpz_class>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
    return out;
}

void divide_out(IntegerRootSplit& split, std::int64_t r)
{
    std::int64_t mult = 0;
    const mpz_class root(static_cast<long>(r));
    while (split.residual.degree() > 0) {
        auto [q, rem] = split.residual.divide_linear(root);
        if (rem != 0)
            break;
        split.residual = std::move(q);
        ++mult;
    }
    if (mult > 0)
        split.roots.push_back({r, mult});
}

void sort_roots(IntegerRootSplit& split)
{
    std::sort(split.roots.begin(), split.roots.end(),
              [](const IntegerRoot& a, const IntegerRoot& b) { return a.value > b.value; });
}

}  // namespace

mpz_class root_bound(const IntegerPolynomial& p)
{
    const int d = p.degree();
    if (d <= 0)
        return 0;
    const auto& c = p.coefficients();
    const double lead = log2_abs(c[static_cast<std::size_t>(d)]);
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= d; ++i) {
        const mpz_class& a = c[static_cast<std::size_t>(d - i)];
        if (a == 0)
            continue;
        double t = log2_abs(a) - lead - (i == d ? 1.0 : 0.0);
        best = std::max(best, t / i);
    }
    if (!std::isfinite(best))
        return 0;
    const double log_bound = best + 1.0;
    if (log_bound < 60.0) {
        mpz_class b(std::ceil(std::exp2(log_bound) * (1.0 + 1e-9)));
        return b + 1;
    }
    mpz_class b = 1;
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(std::ceil(log_bound)) + 1);
    return b;
}

IntegerRootSplit extract_integer_roots(const IntegerPolynomial& p)
{
    IntegerRootSplit split = strip_zero_roots(p);
    if (split.residual.degree() <= 0)
        return split;

    const mpz_class trailing = abs(split.residual.coeff(0));
    mpz_class range = root_bound(split.residual);
    if (trailing < range)
        range = trailing;
    if (range > mpz_class(1UL << 32))
        throw std::range_error("extract_integer_roots: divisor search range too large");

    const unsigned long limit = range.get_ui();
    for (unsigned long r = 1; r <= limit && split.residual.degree() > 0; ++r) {
        if (!mpz_divisible_ui_p(trailing.get_mpz_t(), r))
            continue;
        divide_out(split, static_cast<std::int64_t>(r));
        divide_out(split, -static_cast<std::int64_t>(r));
    }
    sort_roots(split);
    return split;
}

IntegerRootSplit extract_integer_roots(const IntegerPolynomial& p,
                                       std::span<const std::int64_t> candidates)
{
    IntegerRootSplit split = strip_zero_roots(p);
    if (split.residual.degree() <= 0)
        return split;

    const mpz_class trailing = split.residual.coeff(0);
    std::set<std::int64_t> tried;
    for (std::int64_t r : candidates) {
        if (r == 0 || !tried.insert(r).second)
            continue;
        if (split.residual.degree() <= 0)
            break;
        if (!mpz_divisible_ui_p(trailing.get_mpz_t(), static_cast<unsigned long>(r < 0 ? -r : r)))
            continue;
        divide_out(split, r);
    }
    sort_roots(split);
    return split;
}

// ---------------------------------------------------------------------------
// Rational helpers for square-free decomposition and Sturm sequences

namespace {

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly to_q(const IntegerPolynomial& p)
{
    QPoly q;
    q.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients())
        q.emplace_back(c);
    return q;
}

int qdeg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly qderiv(const QPoly& p)
{
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<unsigned long>(i));
    qtrim(d);
    return d;
}

QPoly qsub(QPoly a, const QPoly& b)
{
    if (b.size() > a.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    qtrim(a);
    return a;
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b)
{
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    QPoly q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, mpq_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const mpq_class f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= f * b[i];
        a.pop_back();
        qtrim(a);
    }
    qtrim(q);
    return {q, a};
}

QPoly qmonic(QPoly p)
{
    if (p.empty())
        return p;
    const mpq_class lc = p.back();
    for (auto& c : p)
        c /= lc;
    return p;
}

QPoly qgcd(QPoly a, QPoly b)
{
    while (!b.empty()) {
        auto r = qdivmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return qmonic(std::move(a));
}

/// Clears denominators and content using a positive factor, so signs survive.
IntegerPolynomial primitive_part(const QPoly& p)
{
    mpz_class den = 1;
    for (const auto& c : p)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(p.size());
    mpz_class content = 0;
    for (const auto& c : p) {
        mpz_class v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        z.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : z)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return IntegerPolynomial(std::move(z));
}

int sign_at(const IntegerPolynomial& p, const mpq_class& x)
{
    return sgn(p.evaluate(x));
}

class SturmChain {
public:
    explicit SturmChain(const IntegerPolynomial& squarefree)
    {
        chain_.push_back(squarefree);
        chain_.push_back(squarefree.derivative());
        while (chain_.back().degree() > 0) {
            const auto& a = chain_[chain_.size() - 2];
            const auto& b = chain_.back();
            QPoly r = qdivmod(to_q(a), to_q(b)).second;
            if (r.empty())
                break;
            for (auto& c : r)
                c = -c;
            chain_.push_back(primitive_part(r));
        }
    }

    int variations(const mpq_class& x) const
    {
        int count = 0;
        int last = 0;
        for (const auto& p : chain_) {
            const int s = sign_at(p, x);
            if (s == 0)
                continue;
            if (last != 0 && s != last)
                ++count;
            last = s;
        }
        return count;
    }

    const IntegerPolynomial& base() const { return chain_.front(); }

private:
    std::vector<IntegerPolynomial> chain_;
};

mpq_class midpoint(const mpq_class& a, const mpq_class& b)
{
    mpq_class m = a + b;
    m /= 2;
    return m;
}

double refine(const IntegerPolynomial& p, mpq_class a, mpq_class b, double rel_tol)
{
    const int sa = sign_at(p, a);
    for (int iter = 0; iter < 4096; ++iter) {
        const double da = a.get_d();
        const double db = b.get_d();
        const double scale = std::max({1.0, std::fabs(da), std::fabs(db)});
        if (db - da <= rel_tol * scale)
            break;
        const mpq_class m = midpoint(a, b);
        const int sm = sign_at(p, m);
        if (sm == 0)
            return m.get_d();
        if (sm == sa)
            a = m;
        else
            b = m;
    }
    return midpoint(a, b).get_d();
}

void isolate(const SturmChain& chain, std::vector<double>& out, double rel_tol)
{
    const IntegerPolynomial& p = chain.base();
    const mpq_class bound(root_bound(p) + 1);
    struct Interval {
        mpq_class lo, hi;
        int vlo, vhi;
    };
    std::vector<Interval> work;
    work.push_back({-bound, bound, chain.variations(-bound), chain.variations(bound)});
    while (!work.empty()) {
        Interval iv = std::move(work.back());
        work.pop_back();
        const int count = iv.vlo - iv.vhi;
        if (count <= 0)
            continue;
        if (count == 1) {
            out.push_back(refine(p, iv.lo, iv.hi, rel_tol));
            continue;
        }
        const mpq_class mid = midpoint(iv.lo, iv.hi);
        if (sign_at(p, mid) != 0) {
            const int vm = chain.variations(mid);
            work.push_back({iv.lo, mid, iv.vlo, vm});
            work.push_back({mid, iv.hi, vm, iv.vhi});
            continue;
        }
        // Exact rational root at the midpoint: cut a small root-free gap around it.
        out.push_back(mid.get_d());
        mpq_class delta = (iv.hi - iv.lo) / 4;
        for (;;) {
            const mpq_class lo = mid - delta;
            const mpq_class hi = mid + delta;
            if (sign_at(p, lo) != 0 && sign_at(p, hi) != 0) {
                const int vl = chain.variations(lo);
                const int vh = chain.variations(hi);
                if (vl - vh == 1) {
                    work.push_back({iv.lo, lo, iv.vlo, vl});
                    work.push_back({hi, iv.hi, vh, iv.vhi});
                    break;
                }
            }
            delta /= 2;
        }
    }
}

}  // namespace

std::vector<IntegerPolynomial> squarefree_decomposition(const IntegerPolynomial& p)
{
    std::vector<IntegerPolynomial> out;
    if (p.degree() <= 0)
        return out;
    // Yun's algorithm over Q.
    const QPoly f = qmonic(to_q(p));
    const QPoly fd = qderiv(f);
    const QPoly a0 = qgcd(f, fd);
    QPoly b = qdivmod(f, a0).first;
    QPoly c = qdivmod(fd, a0).first;
    QPoly d = qsub(c, qderiv(b));
    while (qdeg(b) > 0) {
        QPoly a = qgcd(b, d);
        out.push_back(primitive_part(a));
        b = qdivmod(b, a).first;
        c = qdivmod(d, a).first;
        d = qsub(c, qderiv(b));
    }
    return out;
}

std::vector<RealRoot> real_roots(const IntegerPolynomial& p, double rel_tol)
{
    if (p.is_zero())
        throw std::invalid_argument("real_roots: zero polynomial");
    std::vector<RealRoot> roots;
    const auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0)
            continue;
        std::vector<double> found;
        isolate(SturmChain(factors[i]), found, rel_tol);
        for (double r : found)
            roots.push_back({r, static_cast<int>(i + 1)});
    }
    std::sort(roots.begin(), roots.end(),
              [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    return roots;
}

}  // namespace comax
