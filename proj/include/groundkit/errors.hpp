#ifndef GROUNDKIT_ERRORS_HPP
#define GROUNDKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace groundkit {

// Raised on malformed concrete syntax.  Carries the byte offset of the
// failure and the set of tokens that would have been accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected,
               const std::string& detail = "");

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Raised when an enumeration or saturation would exceed its configured cap.
// No partial output is produced.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a derivation is requested for a claim that is not provable
// under the selected calculus variant.
class NotDerivableError : public std::runtime_error {
public:
    explicit NotDerivableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace groundkit

#endif  // GROUNDKIT_ERRORS_HPP
