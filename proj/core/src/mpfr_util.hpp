#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace staircase::detail {

// Owning wrapper around an mpfr_t.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  mpq_class to_rational() const {
    mpq_class out;
    mpfr_get_q(out.get_mpq_t(), value_);
    return out;
  }

 private:
  mpfr_t value_;
};

inline mpfr_prec_t bits_for_digits(int significant_digits) {
  return static_cast<mpfr_prec_t>(significant_digits * 3.33) + 64;
}

std::string format_significant(const MpfrValue& value, int significant_digits);

}  // namespace staircase::detail
