#include "pseudoprob/error.hpp"

#include <utility>

namespace pseudoprob {

Error::Error(std::string code, const std::string& detail)
    : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

}  // namespace pseudoprob
