#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace nodal {

enum class Verdict { pass, fail, not_applicable };
std::string to_string(Verdict v);

struct ReportEntry {
  std::string theorem;
  std::string curve;
  std::string multidegree;
  std::string sample;
  std::string claim;
  std::string computed;
  Verdict verdict = Verdict::pass;
  std::string witness;
};

// With keep_passes off, passing entries are only counted; sweeps with hundreds
// of thousands of instances stay cheap.
class Report {
 public:
  explicit Report(bool keep_passes = true) : keep_passes_(keep_passes) {}

  void add(ReportEntry entry);
  // The builder runs only when the entry is kept.
  void record(Verdict verdict, const std::function<ReportEntry()>& build);
  void merge(const Report& other);

  const std::vector<ReportEntry>& entries() const { return entries_; }
  std::size_t count(Verdict v) const { return counts_[static_cast<std::size_t>(v)]; }
  std::size_t total() const { return counts_[0] + counts_[1] + counts_[2]; }
  bool has_failures() const { return count(Verdict::fail) > 0; }
  bool keeps_passes() const { return keep_passes_; }

 private:
  bool keep_passes_;
  std::vector<ReportEntry> entries_;
  std::size_t counts_[3] = {0, 0, 0};
};

std::string format_text(const Report& report);
// One line per entry: theorem= curve= multidegree= sample= claim= computed=
// verdict= witness=, values with spaces replaced by '_'; then a summary line.
std::string format_records(const Report& report);

}  // namespace nodal
