#include "lpcert/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace lpcert {

namespace {
constexpr unsigned kMinDigits = 16;
constexpr unsigned kMaxDigits = 100000;
constexpr unsigned kDefaultDigits = 34;

// Install the configured start-up precision exactly once, at the earlier of
// static initialization and the first call into this API.  Without this the
// backend's own default (20 digits) would silently stay in effect.
struct StartupPrecision {
  StartupPrecision() { Real::default_precision(initial_digits()); }
};

void ensure_initialized() { static StartupPrecision once; }

const struct InitAtLoad {
  InitAtLoad() { ensure_initialized(); }
} init_at_load;
}  // namespace

unsigned working_digits() {
  ensure_initialized();
  return Real::default_precision();
}

void set_working_digits(unsigned digits) {
  ensure_initialized();
  Real::default_precision(std::clamp(digits, kMinDigits, kMaxDigits));
}

unsigned initial_digits() {
  if (const char* env = std::getenv("LP_CERTIFY_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= static_cast<long>(kMinDigits) &&
        v <= static_cast<long>(kMaxDigits)) {
      return static_cast<unsigned>(v);
    }
  }
  return kDefaultDigits;
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(working_digits()) {
  set_working_digits(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real work_eps() {
  return pow(Real(10), 1 - static_cast<int>(working_digits()));
}

Real at_working_precision(const Real& x) {
  Real y(x);
  y.precision(working_digits());
  return y;
}

std::string fmt_sci(const Real& x, unsigned sig) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(static_cast<int>(sig) - 1) << x;
  return os.str();
}

}  // namespace lpcert
