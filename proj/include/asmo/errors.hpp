#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace asmo {

// Malformed or inconsistent representation spec document.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No Satake data is available at a place (neither table entry nor generator).
class MissingLocalDataError : public std::runtime_error {
 public:
  MissingLocalDataError(const std::string& spec_name, std::uint64_t norm)
      : std::runtime_error("no local data for '" + spec_name + "' at N(v)=" + std::to_string(norm)),
        spec_name_(spec_name),
        norm_(norm) {}

  const std::string& spec_name() const noexcept { return spec_name_; }
  std::uint64_t norm() const noexcept { return norm_; }

 private:
  std::string spec_name_;
  std::uint64_t norm_;
};

// An argument of Gamma landed on one of its poles 0, -1, -2, ...
class GammaPoleError : public std::domain_error {
 public:
  GammaPoleError(std::size_t factor, long pole_index)
      : std::domain_error("Gamma pole hit: factor j=" + std::to_string(factor) + " at argument -" +
                          std::to_string(pole_index)),
        factor_(factor),
        pole_index_(pole_index) {}

  std::size_t factor() const noexcept { return factor_; }
  long pole_index() const noexcept { return pole_index_; }

 private:
  std::size_t factor_;
  long pole_index_;
};

// A point lies inside an excluded disc around a pole of the Gamma-factor ratio.
class ExclusionDiscError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error " + format(achieved) + ")"),
        achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  static std::string format(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
  }

  double achieved_;
};

}  // namespace asmo
