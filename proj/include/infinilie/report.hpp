#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infinilie/json_io.hpp"

namespace infinilie {

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

struct Check {
  std::string id;
  Status status = Status::Pass;
  std::string grade;  // precision the check was certified at, or "exact"
  int samples = 0;
  int failures = 0;
  std::string detail;
  std::optional<Json> counterexample;  // inputs of the first failing sample
  std::optional<Json> certificate;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::string trunc;
  std::vector<Check> checks;
  double wall_time = 0;
  bool precision_exhausted = false;

  int count(Status s) const;
  bool passed() const { return count(Status::Fail) == 0; }
};

enum class Format { Json, Text };

/// Canonical JSON; `with_time` = false drops the one field that varies
/// between identical runs.
Json report_to_json(const Report& r, bool with_time = true);
std::string emit_report(const Report& r, Format fmt, bool with_time = true);

/// Accumulates one property over many samples.
class Tally {
 public:
  Tally(std::string id, std::string grade) : id_(std::move(id)), grade_(std::move(grade)) {}

  /// Records one sample; the witness is only built for the first failure.
  template <class F>
  bool record(bool ok, F&& witness) {
    ++samples_;
    if (!ok) {
      if (failures_ == 0) {
        Json w = witness();
        if (!w.is_null()) counterexample_ = std::move(w);
      }
      ++failures_;
    }
    return ok;
  }
  bool record(bool ok) {
    return record(ok, [] { return Json(); });
  }
  /// Folds in counts produced elsewhere.
  void add(int samples, int failures) {
    samples_ += samples;
    failures_ += failures;
  }
  void skip() { ++skipped_; }
  void set_grade(std::string g) { grade_ = std::move(g); }
  void set_detail(std::string d) { detail_ = std::move(d); }
  void set_certificate(Json c) { certificate_ = std::move(c); }
  Check finish() const;

 private:
  std::string id_;
  std::string grade_;
  std::string detail_;
  int samples_ = 0;
  int failures_ = 0;
  int skipped_ = 0;
  std::optional<Json> counterexample_;
  std::optional<Json> certificate_;
};

}  // namespace infinilie
