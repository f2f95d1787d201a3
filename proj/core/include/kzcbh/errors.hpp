#ifndef KZCBH_ERRORS_HPP
#define KZCBH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kzcbh {

// Thrown when an iterative evaluation cannot reach the requested tolerance
// within its iteration budget. Carries the best value obtained so far.
class ResourceError : public std::runtime_error {
  public:
    ResourceError(const std::string &msg, double best_value, double best_bound)
        : std::runtime_error(msg), best_value_(best_value), best_bound_(best_bound)
    {}

    double best_value() const { return best_value_; }
    double best_bound() const { return best_bound_; }

  private:
    double best_value_;
    double best_bound_;
};

// Violation of an internal invariant (e.g. a basis-change matrix that the
// PBW theorem guarantees is invertible turning out singular).
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string &msg) : std::logic_error(msg) {}
};

} // namespace kzcbh

#endif
