#ifndef AFCOUNT_ERRORS_HPP
#define AFCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace afc {

// Error categories map onto the CLI exit codes.
struct Error : std::runtime_error {
  enum class Kind { Usage = 1, Parse = 2, Internal = 3, OracleMismatch = 4 };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline Error usage_error(const std::string& m) { return Error(Error::Kind::Usage, m); }
inline Error parse_error(const std::string& m) { return Error(Error::Kind::Parse, m); }
inline Error internal_error(const std::string& m) { return Error(Error::Kind::Internal, m); }

}  // namespace afc

#endif
