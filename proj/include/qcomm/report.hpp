#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcomm {

/// Wall-clock timer for filling CheckReport::seconds.
class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

/// First failing input tuple of an exhaustive check, with both evaluated
/// sides printed in canonical form.
struct Counterexample {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one verification pass. Failures are data, not errors: a
/// report always comes back, carrying the first counterexample found in
/// deterministic sweep order.
struct CheckReport {
  std::string check;
  bool pass = true;
  std::string note;
  std::optional<Counterexample> counterexample;
  double seconds = 0;

  std::string status() const { return pass ? "pass" : "fail"; }

  static CheckReport ok(std::string name, std::string note = "") {
    CheckReport r;
    r.check = std::move(name);
    r.note = std::move(note);
    return r;
  }
  static CheckReport failed(std::string name, Counterexample ce, std::string note = "") {
    CheckReport r;
    r.check = std::move(name);
    r.pass = false;
    r.note = std::move(note);
    r.counterexample = std::move(ce);
    return r;
  }
};

/// Thrown by builders whose construction-time gates fail; the message
/// carries the first mismatch.
struct ConstructionError : std::runtime_error {
  explicit ConstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qcomm
