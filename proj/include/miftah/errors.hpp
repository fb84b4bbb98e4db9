#ifndef MIFTAH_ERRORS_HPP_
#define MIFTAH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace miftah {

// Error categories map onto the CLI exit codes: Degenerate is a
// statistical degeneracy (exit 2), everything else is an input/IO
// problem (exit 1).
enum class ErrorKind {
  kIo,
  kFormat,
  kDegenerate,
  kSingular,
  kDimension,
  kModelFormat,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace miftah

#endif  // MIFTAH_ERRORS_HPP_
