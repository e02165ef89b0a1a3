#include "weier/field.hpp"
#include "weier/error.hpp"

#include <ostream>
#include <sstream>

namespace weier {

char const * errc_name(errc c)
{
    switch (c) {
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::zero_form: return "ZeroForm";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::zero_ideal: return "ZeroIdeal";
        case errc::unsupported_field: return "UnsupportedField";
        case errc::duplicate_prime: return "DuplicatePrime";
        case errc::not_found: return "NotFound";
        case errc::singular_generic_fiber: return "SingularGenericFiber";
        case errc::degree_violation: return "DegreeViolation";
        case errc::zero_twist: return "ZeroTwist";
        case errc::ramified_at_zero_or_infinity: return "RamifiedAtZeroOrInfinity";
        case errc::non_integral_input: return "NonIntegralInput";
        case errc::search_budget_exceeded: return "SearchBudgetExceeded";
        case errc::inconsistent_pointed_data: return "InconsistentPointedData";
        case errc::obstruction_non_square_bundle: return "ObstructionNonSquareBundle";
        case errc::obstruction_w_class: return "ObstructionWClass";
        case errc::malformed_input: return "MalformedInput";
        case errc::field_mismatch: return "FieldMismatch";
    }
    return "Unknown";
}

std::string rat_to_string(rat const & q0)
{
    rat q = q0;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

rat rat_from_string(std::string const & s)
{
    rat q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw error(errc::malformed_input, "bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

bool is_squarefree(long n)
{
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

field_spec field_spec::imaginary_quadratic(long d)
{
    if (d >= 0) throw error(errc::unsupported_field, "d must be negative, got " + std::to_string(d));
    if (!is_squarefree(d)) throw error(errc::unsupported_field, "d must be squarefree, got " + std::to_string(d));
    return {d};
}

long field_spec::discriminant() const
{
    if (is_rational()) return 1;
    return omega_is_half() ? d : 4 * d;
}

namespace {

long merged_field(kelem const & x, kelem const & y)
{
    if (x.is_rational()) return y.is_rational() && x.d ? x.d : y.d;
    if (y.is_rational()) return x.d;
    return common_field(x.d, y.d);
}

} // namespace

long common_field(long d1, long d2)
{
    if (d1 == d2 || d2 == 0) return d1;
    if (d1 == 0) return d2;
    throw error(errc::field_mismatch, "elements of Q(sqrt(" + std::to_string(d1) + ")) and Q(sqrt(" + std::to_string(d2) + "))");
}

bool kelem::is_integral() const
{
    return a.get_den() == 1 && b.get_den() == 1;
}

integer kelem::denominator() const
{
    integer m;
    mpz_lcm(m.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    return m;
}

kelem kelem::conj() const
{
    field_spec f{d};
    return kelem(a + b * f.trace_omega(), -b, f);
}

rat kelem::norm() const
{
    field_spec f{d};
    return a * a + a * b * f.trace_omega() + b * b * f.norm_omega();
}

rat kelem::trace() const
{
    field_spec f{d};
    return 2 * a + b * f.trace_omega();
}

kelem kelem::operator-() const
{
    kelem r = *this;
    r.a = -r.a;
    r.b = -r.b;
    return r;
}

kelem & kelem::operator+=(kelem const & o)
{
    d = merged_field(*this, o);
    a += o.a;
    b += o.b;
    return *this;
}

kelem & kelem::operator-=(kelem const & o)
{
    d = merged_field(*this, o);
    a -= o.a;
    b -= o.b;
    return *this;
}

kelem & kelem::operator*=(kelem const & o)
{
    if (o.is_rational()) {
        a *= o.a;
        b *= o.a;
        return *this;
    }
    if (is_rational()) {
        rat s = a;
        *this = o;
        a *= s;
        b *= s;
        return *this;
    }
    d = common_field(d, o.d);
    field_spec f{d};
    rat bd = b * o.b;
    rat na = a * o.a - bd * f.norm_omega();
    rat nb = a * o.b + b * o.a + bd * f.trace_omega();
    a = std::move(na);
    b = std::move(nb);
    return *this;
}

kelem & kelem::operator/=(kelem const & o)
{
    if (o.is_zero()) throw std::domain_error("division by zero in kelem");
    if (o.is_rational()) {
        a /= o.a;
        b /= o.a;
        return *this;
    }
    rat n = o.norm();
    *this *= o.conj();
    a /= n;
    b /= n;
    return *this;
}

bool kelem::operator==(kelem const & o) const
{
    return a == o.a && b == o.b;
}

kelem operator+(kelem x, kelem const & y) { return x += y; }
kelem operator-(kelem x, kelem const & y) { return x -= y; }
kelem operator*(kelem x, kelem const & y) { return x *= y; }
kelem operator/(kelem x, kelem const & y) { return x /= y; }

kelem pow(kelem const & x, long e)
{
    if (e < 0) return pow(kelem(1) / x, -e);
    kelem r(1);
    r.d = x.d;
    kelem base = x;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

std::string to_string(kelem const & x)
{
    if (x.is_rational()) return rat_to_string(x.a);
    std::ostringstream os;
    os << "(" << rat_to_string(x.a) << ")+(" << rat_to_string(x.b) << ")w";
    return os.str();
}

std::ostream & operator<<(std::ostream & o, kelem const & x)
{
    return o << to_string(x);
}

} // namespace weier
