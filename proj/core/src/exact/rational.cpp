#include "bispec/exact/rational.hpp"

#include "bispec/error.hpp"

namespace bispec {

std::string to_string(const Rat& r) { return r.get_str(); }

Rat parse_rat(std::string_view text) {
  Rat r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw Error(ErrorKind::Parse, "invalid rational '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorKind::Domain, "zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

Rat pow(const Rat& base, unsigned exp) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return out;
}

}  // namespace bispec
