#pragma once

// Sparse multivariate polynomials with exact coefficients, used as the exact
// evaluation path for polynomial graph manifolds. Keys are exponent tuples.

#include <map>
#include <vector>

#include "rpnm/numtheory.hpp"

namespace rpnm {

template <typename C>
struct Poly {
    int nvars = 0;
    std::map<std::vector<int>, C> terms;

    Poly() = default;
    explicit Poly(int nv) : nvars(nv) {}

    void add_term(std::vector<int> e, const C& c)
    {
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(std::move(e), c);
        } else {
            it->second = it->second + c;
            if (it->second == C{}) terms.erase(it);
        }
    }

    int total_degree() const
    {
        int d = 0;
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (int k : e) s += k;
            if (s > d) d = s;
        }
        return d;
    }

    template <typename V>
    V eval(const std::vector<V>& x) const
    {
        V acc{};
        for (const auto& [e, c] : terms) {
            V t = coeff_as<V>(c);
            for (int v = 0; v < nvars; ++v)
                for (int k = 0; k < e[v]; ++k) t = t * x[v];
            acc = acc + t;
        }
        return acc;
    }

    Poly derivative(int var) const
    {
        Poly out(nvars);
        for (const auto& [e, c] : terms) {
            if (e[var] == 0) continue;
            std::vector<int> f = e;
            f[var] -= 1;
            out.add_term(std::move(f), c * C(e[var]));
        }
        return out;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly out(a.nvars);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                std::vector<int> e(a.nvars);
                for (int v = 0; v < a.nvars; ++v) e[v] = ea[v] + eb[v];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }

private:
    template <typename V>
    static V coeff_as(const C& c)
    {
        return V(c);
    }
};

using RationalPoly = Poly<Rational>;

// Polynomial over Q(i), in m complex variables.
struct ComplexPoly {
    int nvars = 0;
    std::map<std::vector<int>, ComplexRational> terms;

    ComplexPoly() = default;
    explicit ComplexPoly(int nv) : nvars(nv) {}

    void add_term(std::vector<int> e, const ComplexRational& c)
    {
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(std::move(e), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    int total_degree() const
    {
        int d = 0;
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (int k : e) s += k;
            if (s > d) d = s;
        }
        return d;
    }

    ComplexRational eval(const std::vector<ComplexRational>& z) const
    {
        ComplexRational acc;
        for (const auto& [e, c] : terms) {
            ComplexRational t = c;
            for (int v = 0; v < nvars; ++v)
                for (int k = 0; k < e[v]; ++k) t = t * z[v];
            acc = acc + t;
        }
        return acc;
    }

    ComplexPoly derivative(int var) const
    {
        ComplexPoly out(nvars);
        for (const auto& [e, c] : terms) {
            if (e[var] == 0) continue;
            std::vector<int> f = e;
            f[var] -= 1;
            out.add_term(std::move(f), c * ComplexRational(Rational(e[var]), Rational(0)));
        }
        return out;
    }
};

// Expands a polynomial in z_1..z_m into real/imaginary polynomials in the
// 2m real variables (x_1..x_m, y_1..y_m), substituting z_j = x_j + i y_j.
inline std::pair<RationalPoly, RationalPoly> realify_poly(const ComplexPoly& p)
{
    const int m = p.nvars;
    const int n = 2 * m;

    // Work over Q(i) in 2m real variables, then split.
    Poly<ComplexRational> acc(n);
    for (const auto& [e, c] : p.terms) {
        Poly<ComplexRational> term(n);
        term.add_term(std::vector<int>(n, 0), c);
        for (int j = 0; j < m; ++j) {
            Poly<ComplexRational> zj(n);
            std::vector<int> ex(n, 0), ey(n, 0);
            ex[j] = 1;
            ey[m + j] = 1;
            zj.add_term(ex, ComplexRational(Rational(1), Rational(0)));
            zj.add_term(ey, ComplexRational(Rational(0), Rational(1)));
            for (int k = 0; k < e[j]; ++k) term = term * zj;
        }
        for (const auto& [te, tc] : term.terms) acc.add_term(te, tc);
    }

    RationalPoly u(n), v(n);
    for (const auto& [e, c] : acc.terms) {
        if (c.re != 0) u.add_term(e, c.re);
        if (c.im != 0) v.add_term(e, c.im);
    }
    return {u, v};
}

// Precomputed data for the exact residue test  || q f(a/q) || <= delta.
// Writing f = sum c_e x^e with common denominator L and D = max(deg f, 1),
//   q f(a/q) = W(a, q) / (L q^{D-1}),  W = sum (L c_e) a^e q^{D-|e|}.
struct CompiledRationalPoly {
    int nvars = 0;
    int degree = 1;
    BigInt denom_lcm{1};
    std::vector<std::pair<BigInt, std::vector<int>>> terms; // integer coeff, exponents

    explicit CompiledRationalPoly(const RationalPoly& p) : nvars(p.nvars)
    {
        degree = std::max(p.total_degree(), 1);
        for (const auto& [e, c] : p.terms)
            denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(c));
        for (const auto& [e, c] : p.terms)
            terms.emplace_back(BigInt(numerator(c) * (denom_lcm / denominator(c))), e);
    }

    // W(a, q) as above.
    BigInt scaled_numerator(const std::vector<BigInt>& a, const BigInt& q) const
    {
        BigInt acc = 0;
        for (const auto& [c, e] : terms) {
            BigInt t = c;
            int deg = 0;
            for (int v = 0; v < nvars; ++v) {
                deg += e[v];
                for (int k = 0; k < e[v]; ++k) t *= a[v];
            }
            for (int k = deg; k < degree; ++k) t *= q;
            acc += t;
        }
        return acc;
    }

    // Denominator L q^{D-1} (positive for q >= 1).
    BigInt scale(const BigInt& q) const
    {
        BigInt s = denom_lcm;
        for (int k = 1; k < degree; ++k) s *= q;
        return s;
    }

    // Exact test dist(W/s, Z) <= delta without building a Rational.
    bool residue_within(const std::vector<BigInt>& a, const BigInt& q, const Rational& delta) const
    {
        BigInt s = scale(q);
        BigInt w = scaled_numerator(a, q) % s;
        if (w < 0) w += s;
        BigInt d = w <= s - w ? w : BigInt(s - w);
        return d * denominator(delta) <= numerator(delta) * s;
    }

    Rational residue(const std::vector<BigInt>& a, const BigInt& q) const
    {
        BigInt s = scale(q);
        BigInt w = scaled_numerator(a, q) % s;
        if (w < 0) w += s;
        BigInt d = w <= s - w ? w : BigInt(s - w);
        return Rational(d, s);
    }
};

// Gaussian analogue: q f(a/q) = W(a, q) / (L q^{D-1}) over Z[i]. Rationalising
// by the conjugate, the real/imaginary parts are integers over N = L^2 |q|^{2(D-1)}.
struct CompiledComplexPoly {
    int nvars = 0;
    int degree = 1;
    BigInt denom_lcm{1};
    std::vector<std::pair<GaussianInt, std::vector<int>>> terms;

    explicit CompiledComplexPoly(const ComplexPoly& p) : nvars(p.nvars)
    {
        degree = std::max(p.total_degree(), 1);
        for (const auto& [e, c] : p.terms) {
            denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(c.re));
            denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(c.im));
        }
        for (const auto& [e, c] : p.terms) {
            GaussianInt ci(BigInt(numerator(c.re) * (denom_lcm / denominator(c.re))),
                           BigInt(numerator(c.im) * (denom_lcm / denominator(c.im))));
            terms.emplace_back(ci, e);
        }
    }

    GaussianInt scaled_numerator(const std::vector<GaussianInt>& a, const GaussianInt& q) const
    {
        GaussianInt acc(BigInt(0), BigInt(0));
        for (const auto& [c, e] : terms) {
            GaussianInt t = c;
            int deg = 0;
            for (int v = 0; v < nvars; ++v) {
                deg += e[v];
                for (int k = 0; k < e[v]; ++k) t = t * a[v];
            }
            for (int k = deg; k < degree; ++k) t = t * q;
            acc = acc + t;
        }
        return acc;
    }

    // Tests dist(Re value, Z) <= dre and dist(Im value, Z) <= dim.
    bool residue_within(const std::vector<GaussianInt>& a, const GaussianInt& q,
                        const Rational& dre, const Rational& dim) const
    {
        GaussianInt s(denom_lcm, BigInt(0));
        for (int k = 1; k < degree; ++k) s = s * q;
        GaussianInt w = scaled_numerator(a, q) * s.conj();
        BigInt nrm = s.norm();
        auto within = [&nrm](BigInt comp, const Rational& delta) {
            comp %= nrm;
            if (comp < 0) comp += nrm;
            BigInt d = comp <= nrm - comp ? comp : BigInt(nrm - comp);
            return d * denominator(delta) <= numerator(delta) * nrm;
        };
        return within(w.re, dre) && within(w.im, dim);
    }
};

} // namespace rpnm
