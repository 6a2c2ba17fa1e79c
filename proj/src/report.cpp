#include "nodal/report.hpp"

#include <sstream>

namespace nodal {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

void Report::add(ReportEntry entry) {
  ++counts_[static_cast<std::size_t>(entry.verdict)];
  if (keep_passes_ || entry.verdict != Verdict::pass) entries_.push_back(std::move(entry));
}

void Report::record(Verdict verdict, const std::function<ReportEntry()>& build) {
  if (!keep_passes_ && verdict == Verdict::pass) {
    ++counts_[0];
    return;
  }
  ReportEntry e = build();
  e.verdict = verdict;
  add(std::move(e));
}

void Report::merge(const Report& other) {
  for (std::size_t k = 0; k < 3; ++k) counts_[k] += other.counts_[k];
  for (const auto& e : other.entries_)
    if (keep_passes_ || e.verdict != Verdict::pass) entries_.push_back(e);
}

namespace {

std::string summary(const Report& r) {
  std::ostringstream out;
  out << "total=" << r.total() << " pass=" << r.count(Verdict::pass) << " fail=" << r.count(Verdict::fail)
      << " not-applicable=" << r.count(Verdict::not_applicable);
  return out.str();
}

std::string squash(std::string s) {
  for (auto& c : s)
    if (c == ' ' || c == '\t' || c == '\n') c = '_';
  return s.empty() ? "-" : s;
}

}  // namespace

std::string format_text(const Report& report) {
  std::ostringstream out;
  for (const auto& e : report.entries()) {
    out << "[" << to_string(e.verdict) << "] " << e.theorem << " " << e.curve;
    if (!e.multidegree.empty()) out << " d=" << e.multidegree;
    if (!e.sample.empty()) out << " sample=" << e.sample;
    out << " | claim: " << e.claim << " | computed: " << e.computed;
    if (!e.witness.empty()) out << " | witness: " << e.witness;
    out << "\n";
  }
  out << summary(report) << "\n";
  return out.str();
}

std::string format_records(const Report& report) {
  std::ostringstream out;
  for (const auto& e : report.entries())
    out << "theorem=" << squash(e.theorem) << " curve=" << squash(e.curve) << " multidegree=" << squash(e.multidegree)
        << " sample=" << squash(e.sample) << " claim=" << squash(e.claim) << " computed=" << squash(e.computed)
        << " verdict=" << to_string(e.verdict) << " witness=" << squash(e.witness) << "\n";
  out << "summary " << summary(report) << "\n";
  return out.str();
}

}  // namespace nodal
