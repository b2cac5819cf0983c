#include "sparsemult/rational.hpp"

#include "sparsemult/error.hpp"

namespace sparsemult {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw InputError("malformed rational \"" + text + "\"");
    }
    q.canonicalize();
    return q;
}

std::int64_t to_int64(const Rational& q)
{
    if (!is_integer(q)) {
        throw InvariantError("expected an integer, got " + to_string(q));
    }
    const Integer& z = q.get_num();
    if (!z.fits_slong_p()) {
        throw InvariantError("integer out of range: " + z.get_str());
    }
    return z.get_si();
}

Rational factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

} // namespace sparsemult
