#include "infinilie/report.hpp"

#include <algorithm>
#include <sstream>

namespace infinilie {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

Check Tally::finish() const {
  Check c;
  c.id = id_;
  c.grade = grade_;
  c.samples = samples_;
  c.failures = failures_;
  c.detail = detail_;
  c.counterexample = counterexample_;
  c.certificate = certificate_;
  if (failures_ > 0) {
    c.status = Status::Fail;
  } else if (samples_ == 0) {
    c.status = Status::Skip;
  }
  if (skipped_ > 0) c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(skipped_) + " samples skipped";
  return c;
}

Json report_to_json(const Report& r, bool with_time) {
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    Json j{{"id", c.id},           {"status", to_string(c.status)}, {"grade", c.grade},
           {"samples", c.samples}, {"failures", c.failures}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.counterexample) j["counterexample"] = *c.counterexample;
    if (c.certificate) j["certificate"] = *c.certificate;
    checks.push_back(std::move(j));
  }
  Json out{{"suite", r.suite},
           {"seed", r.seed},
           {"trunc", r.trunc},
           {"checks", checks},
           {"summary", {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"skip", r.count(Status::Skip)}}}};
  if (r.precision_exhausted) out["precision_exhausted"] = true;
  if (with_time) out["wall_time"] = r.wall_time;
  return out;
}

std::string emit_report(const Report& r, Format fmt, bool with_time) {
  if (fmt == Format::Json) return report_to_json(r, with_time).dump(2) + "\n";
  std::ostringstream os;
  const std::string name = r.suite.empty() ? "report" : r.suite;
  os << name << ": " << r.checks.size() << " checks";
  if (!r.checks.empty())
    os << ", " << r.count(Status::Pass) << " pass, " << r.count(Status::Fail) << " fail, " << r.count(Status::Skip)
       << " skip";
  os << "\n";
  for (const Check& c : r.checks) {
    std::string tag = to_string(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return std::toupper(ch); });
    os << "  " << tag << "  " << c.id << "  [" << c.samples << (c.samples == 1 ? " sample" : " samples") << ", grade " << c.grade << "]";
    if (c.failures > 0) os << "  " << c.failures << " failures";
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
    if (c.counterexample) os << "        counterexample: " << c.counterexample->dump() << "\n";
  }
  if (with_time) {
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << r.wall_time;
    os << "wall time " << t.str() << " s\n";
  }
  return os.str();
}

}  // namespace infinilie
