#include "weier/class_group.hpp"
#include "weier/error.hpp"

#include <algorithm>
#include <map>

namespace weier {

bool qform::operator<(qform const & o) const
{
    if (A != o.A) return A < o.A;
    if (B != o.B) return B < o.B;
    return C < o.C;
}

bool is_reduced(qform const & f)
{
    if (abs(f.B) > f.A || f.A > f.C) return false;
    if ((abs(f.B) == f.A || f.A == f.C) && f.B < 0) return false;
    return true;
}

qform reduce(qform f)
{
    if (f.disc() >= 0) return f;
    if (f.A < 0) throw std::domain_error("reduce: form is not positive definite");
    auto normalize = [](qform & g) {
        /* bring B into (-A, A] */
        integer two_a = 2 * g.A;
        integer r;
        integer num = g.A - g.B;
        mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), two_a.get_mpz_t());
        if (r != 0) {
            g.C = g.A * r * r + g.B * r + g.C;
            g.B += two_a * r;
        }
    };
    normalize(f);
    while (f.A > f.C) {
        std::swap(f.A, f.C);
        f.B = -f.B;
        normalize(f);
    }
    if (f.A == f.C && f.B < 0) f.B = -f.B;
    return f;
}

qform principal_form(long D)
{
    if (D > 0) return {1, 1, 0};
    long const delta = ((D % 2) + 2) % 2;
    return {1, delta, (delta - D) / 4};
}

qform compose(qform const & f, qform const & g)
{
    integer const D = f.disc();
    if (D != g.disc()) throw std::domain_error("compose: discriminants differ");
    if (D > 0) return f;
    qform f1 = f, f2 = g;
    if (f1.A > f2.A) std::swap(f1, f2);
    integer s = (f1.B + f2.B) / 2;
    integer n = f2.B - s;
    integer y1, d, u, v;
    if (mpz_divisible_p(f2.A.get_mpz_t(), f1.A.get_mpz_t())) {
        y1 = 0;
        d = f1.A;
    } else {
        mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), f2.A.get_mpz_t(), f1.A.get_mpz_t());
        y1 = u;
    }
    integer x2, y2, d1;
    if (mpz_divisible_p(s.get_mpz_t(), d.get_mpz_t())) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        mpz_gcdext(d1.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
        x2 = u;
        y2 = -v;
    }
    integer v1 = f1.A / d1, v2 = f2.A / d1;
    integer r = y1 * y2 * n - x2 * f2.C;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), v1.get_mpz_t());
    qform h;
    h.B = f2.B + 2 * v2 * r;
    h.A = v1 * v2;
    integer num = h.B * h.B - D;
    integer den = 4 * h.A;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw std::logic_error("compose: non-integral result");
    h.C = num / den;
    return reduce(h);
}

qform form_inverse(qform const & f)
{
    if (f.disc() > 0) return f;
    return reduce({f.A, -f.B, f.C});
}

qform form_power(qform const & f, long e)
{
    if (e < 0) return form_power(form_inverse(f), -e);
    long const D = f.disc().get_si();
    qform r = principal_form(D), base = reduce(f);
    while (e) {
        if (e & 1) r = compose(r, base);
        e >>= 1;
        if (e) base = compose(base, base);
    }
    return r;
}

std::vector<qform> reduced_forms(long D)
{
    if (D >= 0) return {principal_form(1)};
    std::vector<qform> out;
    long const absd = -D;
    for (long a = 1; 3 * a * a <= absd; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if (((b - D) % 2 + 2) % 2) continue;
            long num = b * b - D;
            if (num % (4 * a)) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            out.push_back({a, b, c});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int class_group::index_of(qform const & f) const
{
    qform r = reduce(f);
    auto it = std::lower_bound(forms.begin(), forms.end(), r);
    if (it == forms.end() || !(*it == r)) throw std::logic_error("form not in class group");
    return static_cast<int>(it - forms.begin());
}

long class_group::order_of(qform const & f) const
{
    int const i = index_of(f);
    long k = 1;
    for (int x = i; x != 0; x = table[x][i]) ++k;
    return k;
}

bool class_group::is_square(qform const & f) const
{
    int const i = index_of(f);
    for (size_t j = 0; j < forms.size(); ++j)
        if (table[j][j] == i) return true;
    return false;
}

std::vector<long> group_structure(std::vector<std::vector<int>> const & table, int identity)
{
    long const h = static_cast<long>(table.size());
    std::vector<long> ord(h);
    for (long i = 0; i < h; ++i) {
        long k = 1;
        for (int x = static_cast<int>(i); x != identity; x = table[x][i]) ++k;
        ord[i] = k;
    }
    /* prime q -> exponents of the cyclic q-parts, largest first */
    std::map<long, std::vector<int>> parts;
    long rest = h;
    for (long q = 2; rest > 1; ++q) {
        if (rest % q) continue;
        int vq = 0;
        while (rest % q == 0) {
            rest /= q;
            ++vq;
        }
        /* N_k = #{x : x^(q^k) = 1} = q^(sum_i min(k, e_i)) */
        std::vector<int> log_n{0};
        long qk = 1;
        for (int k = 1; log_n.back() < vq; ++k) {
            qk *= q;
            long cnt = 0;
            for (long i = 0; i < h; ++i)
                if (qk % ord[i] == 0) ++cnt;
            int l = 0;
            for (long c = cnt; c > 1; c /= q) ++l;
            log_n.push_back(l);
        }
        /* number of e_i >= k is log_n[k] - log_n[k-1] */
        std::vector<int> ge;
        for (size_t k = 1; k < log_n.size(); ++k) ge.push_back(log_n[k] - log_n[k - 1]);
        std::vector<int> exps;
        for (int c = 0; c < ge[0]; ++c) {
            int e = 0;
            while (e < static_cast<int>(ge.size()) && ge[e] > c) ++e;
            exps.push_back(e);
        }
        parts[q] = exps;
    }
    size_t n = 0;
    for (auto const & [q, e] : parts) n = std::max(n, e.size());
    std::vector<long> inv(n, 1);
    for (auto const & [q, e] : parts) {
        for (size_t j = 0; j < e.size(); ++j)
            for (int k = 0; k < e[j]; ++k) inv[j] *= q;
    }
    std::reverse(inv.begin(), inv.end());
    return inv;
}

class_group compute_class_group(field_spec K)
{
    if (K.d > 0) throw error(errc::unsupported_field, "real quadratic fields are not supported");
    class_group G;
    G.field = K;
    G.D = K.discriminant();
    G.forms = reduced_forms(K.is_rational() ? 1 : G.D);
    size_t const h = G.forms.size();
    G.table.assign(h, std::vector<int>(h));
    for (size_t i = 0; i < h; ++i)
        for (size_t j = i; j < h; ++j) {
            int k = G.index_of(compose(G.forms[i], G.forms[j]));
            G.table[i][j] = G.table[j][i] = k;
        }
    G.structure = group_structure(G.table, 0);
    return G;
}

qform class_of(frac_ideal const & I)
{
    if (I.field.is_rational()) return principal_form(1);
    long const D = I.field.discriminant();
    long const t = I.field.trace_omega();
    /* the class of J/den is that of [a', b' + w] with J = c [a', b' + w] */
    integer a = I.a / I.c, b = I.b / I.c;
    integer B = -(2 * b + t);
    integer num = B * B - D;
    return reduce({a, B, num / (4 * a)});
}

frac_ideal ideal_of(field_spec K, qform const & f)
{
    if (K.is_rational()) return frac_ideal::unit(K);
    long const t = K.trace_omega();
    integer b = (-f.B - t) / 2;
    return frac_ideal::from_hnf(K, 1, f.A, b, 1);
}

bool is_principal_class(qform const & f)
{
    return f.A == 1;
}

std::optional<kelem> principal_generator(frac_ideal const & I)
{
    field_spec const K = I.field;
    if (K.is_rational()) return kelem(rat(I.a, I.den));
    integer const t = K.trace_omega(), n0 = K.norm_omega();
    struct vec
    {
        integer x, y;
    };
    auto norm = [&](vec const & v) -> integer { return v.x * v.x + t * v.x * v.y + n0 * v.y * v.y; };
    auto twice_dot = [&](vec const & u, vec const & v) -> integer {
        return 2 * u.x * v.x + t * (u.x * v.y + v.x * u.y) + 2 * n0 * u.y * v.y;
    };
    vec v1{I.a, 0}, v2{I.b, I.c};
    if (norm(v1) > norm(v2)) std::swap(v1, v2);
    for (;;) {
        integer n1 = norm(v1);
        /* q = round(dot / n1) = floor((2 dot + 2 n1) / (4 n1)) with 2 dot given */
        integer q, num = 2 * twice_dot(v1, v2) + 2 * n1, den = 4 * n1;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (q == 0) break;
        v2.x -= q * v1.x;
        v2.y -= q * v1.y;
        if (norm(v2) >= n1) break;
        std::swap(v1, v2);
    }
    if (norm(v2) < norm(v1)) std::swap(v1, v2);
    if (norm(v1) != I.a * I.c) return std::nullopt;
    return kelem(rat(v1.x, I.den), rat(v1.y, I.den), K);
}

field_spec find_field_with_class_element_of_order(long n, long bound)
{
    if (n < 1) throw std::invalid_argument("order must be positive");
    for (long d = -1; d >= -bound; --d) {
        if (!is_squarefree(d)) continue;
        class_group G = compute_class_group(field_spec::imaginary_quadratic(d));
        if (G.exponent() % n == 0) return G.field;
    }
    throw error(errc::not_found, "no field with a class of order " + std::to_string(n) + " for |d| <= "
                                     + std::to_string(bound));
}

} // namespace weier
