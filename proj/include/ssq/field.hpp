#pragma once

// Finite fields GF(p^n) of order d <= 256.
//
// A Field is built from (p, n) with a deterministic modulus: the
// lexicographically smallest monic irreducible polynomial of degree n over
// Z_p, coefficients compared constant term first. Elements are stored by
// index (sum of coeffs[i] * p^i), arithmetic is table driven.
//
// The canonical element order is 0, m^0, m^1, ..., m^(d-2) where m is the
// primitive element (smallest index of multiplicative order d-1). This order
// drives coset labeling, rendering and all deterministic output.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ssq/errors.hpp"

namespace ssq {

/// One field element, stored as its index in [0, d).
/// Index encoding and coefficient encoding are mutually inverse:
/// index = sum coeffs[i] * p^i.
struct FieldElement {
    std::uint16_t value = 0;
    friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

class Field {
public:
    /// Builds GF(p^n) with the deterministic modulus and primitive element.
    static Field make(int p, int n) { return Field(p, n, {}, true); }

    /// Builds GF(p^n) over an explicit modulus (validated monic irreducible).
    static Field make(int p, int n, const std::vector<int>& modulus) {
        return Field(p, n, modulus, false);
    }

    int characteristic() const { return d_->p; }
    int degree() const { return d_->n; }
    int order() const { return d_->d; }

    /// Modulus coefficients, constant term first, length n+1, monic.
    const std::vector<int>& modulus() const { return d_->modulus; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement primitive_element() const { return {d_->primitive}; }

    FieldElement element(int index) const {
        if (index < 0 || index >= d_->d)
            throw invalid_argument_error("element index out of range");
        return {static_cast<std::uint16_t>(index)};
    }

    bool valid(FieldElement a) const { return a.value < d_->d; }

    FieldElement add(FieldElement a, FieldElement b) const {
        check(a); check(b);
        return {d_->add[a.value * d_->d + b.value]};
    }

    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

    FieldElement neg(FieldElement a) const {
        check(a);
        return {d_->neg[a.value]};
    }

    FieldElement mul(FieldElement a, FieldElement b) const {
        check(a); check(b);
        return {d_->mul[a.value * d_->d + b.value]};
    }

    FieldElement inv(FieldElement a) const {
        check(a);
        if (a.value == 0) throw division_by_zero_error("inverse of zero");
        return {d_->inv[a.value]};
    }

    FieldElement pow(FieldElement a, long long k) const {
        check(a);
        if (a.value == 0) {
            if (k < 0) throw division_by_zero_error("inverse of zero");
            return k == 0 ? one() : zero();
        }
        long long m = d_->d - 1;
        long long e = ((k % m) + m) % m;
        FieldElement r = one();
        FieldElement base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// tr a = a + a^p + ... + a^(p^(n-1)); lands in the prime subfield.
    FieldElement trace(FieldElement a) const {
        check(a);
        return {d_->trace[a.value]};
    }

    /// K = { a : tr a = 0 }, canonically ordered; |K| = p^(n-1).
    std::vector<FieldElement> trace_zero_set() const {
        std::vector<FieldElement> k;
        for (int r = 0; r < d_->d; ++r) {
            FieldElement e = element_at_rank(r);
            if (d_->trace[e.value] == 0) k.push_back(e);
        }
        return k;
    }

    /// Position in the canonical order: 0 -> 0, m^k -> k+1.
    int rank(FieldElement a) const {
        check(a);
        return d_->rank[a.value];
    }

    FieldElement element_at_rank(int r) const {
        if (r < 0 || r >= d_->d) throw invalid_argument_error("rank out of range");
        return {d_->at_rank[r]};
    }

    bool less(FieldElement a, FieldElement b) const { return rank(a) < rank(b); }

    /// Coefficient vector over Z_p in the polynomial basis, length n.
    std::vector<int> coefficients(FieldElement a) const {
        check(a);
        std::vector<int> c(d_->n);
        int v = a.value;
        for (int i = 0; i < d_->n; ++i) { c[i] = v % d_->p; v /= d_->p; }
        return c;
    }

    FieldElement from_coefficients(const std::vector<int>& c) const {
        if (static_cast<int>(c.size()) != d_->n)
            throw invalid_argument_error("coefficient vector has wrong length");
        int v = 0;
        for (int i = d_->n - 1; i >= 0; --i) {
            if (c[i] < 0 || c[i] >= d_->p)
                throw invalid_argument_error("coefficient out of range");
            v = v * d_->p + c[i];
        }
        return {static_cast<std::uint16_t>(v)};
    }

    /// Canonical text form: 0, 1, m, m^2, ..., m^k.
    std::string to_string(FieldElement a) const {
        int r = rank(a);
        if (r == 0) return "0";
        if (r == 1) return "1";
        if (r == 2) return "m";
        return "m^" + std::to_string(r - 1);
    }

    FieldElement parse(const std::string& s) const {
        if (s == "0") return zero();
        if (s == "1") return one();
        if (s == "m") {
            if (d_->d < 3) throw parse_error("'m' is not an element of GF(2)");
            return element_at_rank(2);
        }
        if (s.rfind("m^", 0) == 0) {
            const std::string expo = s.substr(2);
            if (expo.empty() || expo.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("bad element literal: " + s);
            long long k = std::stoll(expo);
            if (d_->d < 3) throw parse_error("'m^k' is not an element of GF(2)");
            return element_at_rank(static_cast<int>(k % (d_->d - 1)) + 1);
        }
        throw parse_error("bad element literal: " + s);
    }

    /// Human readable modulus, e.g. "x^2 + x + 1".
    std::string modulus_string() const {
        std::string out;
        for (int deg = d_->n; deg >= 0; --deg) {
            int c = d_->modulus[deg];
            if (c == 0 && deg != 0) continue;
            if (c == 0 && deg == 0 && !out.empty()) continue;
            if (!out.empty()) out += " + ";
            if (deg == 0) { out += std::to_string(c); continue; }
            if (c != 1) out += std::to_string(c);
            out += deg == 1 ? "x" : "x^" + std::to_string(deg);
        }
        return out;
    }

    friend bool operator==(const Field& a, const Field& b) {
        return a.d_->p == b.d_->p && a.d_->n == b.d_->n && a.d_->modulus == b.d_->modulus;
    }

private:
    struct Data {
        int p = 0, n = 0, d = 0;
        std::vector<int> modulus;
        std::vector<std::uint16_t> add, mul, neg, inv, trace, at_rank;
        std::vector<int> rank;
        std::uint16_t primitive = 0;
    };

    std::shared_ptr<const Data> d_;

    void check(FieldElement a) const {
        if (a.value >= d_->d) throw invalid_argument_error("element does not belong to this field");
    }

    static bool is_prime(int p) {
        if (p < 2) return false;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) return false;
        return true;
    }

    // Polynomial helpers over Z_p, coefficients constant term first.
    static std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
        std::vector<int> r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        return r;
    }

    static void poly_trim(std::vector<int>& a) {
        while (a.size() > 1 && a.back() == 0) a.pop_back();
    }

    // Remainder of a / b where b is monic.
    static std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
        const int db = static_cast<int>(b.size()) - 1;
        for (int da = static_cast<int>(a.size()) - 1; da >= db; --da) {
            const int c = a[da];
            if (c == 0) continue;
            for (int i = 0; i <= db; ++i) {
                int& t = a[da - db + i];
                t = ((t - c * b[i]) % p + p) % p;
            }
        }
        if (static_cast<int>(a.size()) > db) a.resize(db);
        if (a.empty()) a.push_back(0);
        poly_trim(a);
        return a;
    }

    static bool poly_is_zero(const std::vector<int>& a) {
        for (int c : a)
            if (c != 0) return false;
        return true;
    }

    static bool is_irreducible(const std::vector<int>& f, int p) {
        const int n = static_cast<int>(f.size()) - 1;
        if (n == 1) return true;
        // trial division by all monic polynomials of degree 1..n/2
        for (int deg = 1; deg * 2 <= n; ++deg) {
            long long count = 1;
            for (int i = 0; i < deg; ++i) count *= p;
            for (long long c = 0; c < count; ++c) {
                std::vector<int> g(deg + 1, 0);
                long long v = c;
                for (int i = 0; i < deg; ++i) { g[i] = static_cast<int>(v % p); v /= p; }
                g[deg] = 1;
                if (poly_is_zero(poly_rem(f, g, p))) return false;
            }
        }
        return true;
    }

    // Smallest monic irreducible of degree n, coefficients compared constant
    // term first.
    static std::vector<int> find_modulus(int p, int n) {
        long long count = 1;
        for (int i = 0; i < n; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            // big-endian digits so ascending code = constant-first lex order
            std::vector<int> f(n + 1, 0);
            long long v = code;
            for (int i = n - 1; i >= 0; --i) { f[i] = static_cast<int>(v % p); v /= p; }
            f[n] = 1;
            if (is_irreducible(f, p)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    Field(int p, int n, std::vector<int> modulus, bool derive_modulus) {
        if (!is_prime(p)) throw invalid_argument_error("p must be prime");
        if (n < 1) throw invalid_argument_error("n must be at least 1");
        long long dd = 1;
        for (int i = 0; i < n; ++i) {
            dd *= p;
            if (dd > 256) throw invalid_argument_error("field order must not exceed 256");
        }
        auto data = std::make_shared<Data>();
        data->p = p;
        data->n = n;
        data->d = static_cast<int>(dd);

        if (derive_modulus) {
            data->modulus = find_modulus(p, n);
        } else {
            if (static_cast<int>(modulus.size()) != n + 1)
                throw invalid_argument_error("modulus must have degree n");
            for (int c : modulus)
                if (c < 0 || c >= p) throw invalid_argument_error("modulus coefficient out of range");
            if (modulus[n] != 1) throw invalid_argument_error("modulus must be monic");
            if (!is_irreducible(modulus, p))
                throw invalid_argument_error("modulus is reducible");
            data->modulus = std::move(modulus);
        }

        const int d = data->d;
        auto coeffs_of = [&](int v) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) { c[i] = v % p; v /= p; }
            return c;
        };
        auto index_of = [&](const std::vector<int>& c) {
            int v = 0;
            for (int i = n - 1; i >= 0; --i) v = v * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
            return v;
        };

        data->add.resize(d * d);
        data->neg.resize(d);
        for (int a = 0; a < d; ++a) {
            auto ca = coeffs_of(a);
            std::vector<int> cn(n);
            for (int i = 0; i < n; ++i) cn[i] = (p - ca[i]) % p;
            data->neg[a] = static_cast<std::uint16_t>(index_of(cn));
            for (int b = 0; b < d; ++b) {
                auto cb = coeffs_of(b);
                std::vector<int> cs(n);
                for (int i = 0; i < n; ++i) cs[i] = (ca[i] + cb[i]) % p;
                data->add[a * d + b] = static_cast<std::uint16_t>(index_of(cs));
            }
        }

        data->mul.resize(d * d);
        for (int a = 0; a < d; ++a) {
            auto ca = coeffs_of(a);
            for (int b = a; b < d; ++b) {
                auto cb = coeffs_of(b);
                auto prod = poly_rem(poly_mul(ca, cb, p), data->modulus, p);
                int v = index_of(prod);
                data->mul[a * d + b] = static_cast<std::uint16_t>(v);
                data->mul[b * d + a] = static_cast<std::uint16_t>(v);
            }
        }

        // primitive element: smallest index of multiplicative order d-1
        data->primitive = 0;
        for (int a = 1; a < d; ++a) {
            int ord = 1;
            int x = a;
            while (x != 1) { x = data->mul[x * d + a]; ++ord; }
            if (ord == d - 1) { data->primitive = static_cast<std::uint16_t>(a); break; }
        }
        if (data->primitive == 0) throw std::logic_error("no primitive element found");

        data->rank.assign(d, 0);
        data->at_rank.assign(d, 0);
        {
            int e = 1;
            for (int k = 0; k < d - 1; ++k) {
                data->rank[e] = k + 1;
                data->at_rank[k + 1] = static_cast<std::uint16_t>(e);
                e = data->mul[e * d + data->primitive];
            }
        }

        data->inv.assign(d, 0);
        for (int a = 1; a < d; ++a) {
            int r = data->rank[a];           // a = m^(r-1)
            int s = (d - 1 - (r - 1)) % (d - 1);
            data->inv[a] = data->at_rank[s + 1];
        }

        data->trace.assign(d, 0);
        for (int a = 0; a < d; ++a) {
            int t = a;
            int x = a;
            for (int i = 1; i < n; ++i) {
                int y = x;
                for (int j = 1; j < p; ++j) y = data->mul[y * d + x]; // x^p
                x = y;
                t = data->add[t * d + x];
            }
            data->trace[a] = static_cast<std::uint16_t>(t);
        }

        d_ = std::move(data);
    }
};

// Free-function forms mirroring the operation surface.
inline Field make_field(int p, int n) { return Field::make(p, n); }
inline FieldElement add(const Field& f, FieldElement a, FieldElement b) { return f.add(a, b); }
inline FieldElement mul(const Field& f, FieldElement a, FieldElement b) { return f.mul(a, b); }
inline FieldElement inv(const Field& f, FieldElement a) { return f.inv(a); }
inline FieldElement trace(const Field& f, FieldElement a) { return f.trace(a); }
inline std::vector<FieldElement> trace_zero_set(const Field& f) { return f.trace_zero_set(); }
inline FieldElement primitive_element(const Field& f) { return f.primitive_element(); }

} // namespace ssq
