#include "extremal/report.hpp"

namespace extremal {

void Report::absorb(const Report& other) {
  items_checked += other.items_checked;
  for (const auto& c : other.counterexamples) fail(c);
  details.insert(details.end(), other.details.begin(), other.details.end());
}

void write_human(std::ostream& os, const Report& r) {
  os << (r.passed ? "PASS " : "FAIL ") << r.check_id << "  items=" << r.items_checked
     << "  counterexamples=" << r.counterexamples.size() << "  " << r.elapsed.count() << "ms\n";
  for (const auto& d : r.details) os << "    " << d << '\n';
  for (const auto& c : r.counterexamples) {
    os << "    counterexample: " << c.context;
    if (c.witness) os << "  witness(" << *c.witness << ")";
    if (!c.note.empty()) os << "  " << c.note;
    os << '\n';
  }
}

nlohmann::json to_json(const Occurrence& o) {
  return {{"start", o.start},
          {"length", o.length},
          {"period", o.period},
          {"exponent", o.exponent.str()}};
}

nlohmann::json to_json(const Report& r, bool with_timing) {
  nlohmann::json ces = nlohmann::json::array();
  for (const auto& c : r.counterexamples) {
    nlohmann::json j = {{"context", c.context}, {"note", c.note}};
    j["witness"] = c.witness ? to_json(*c.witness) : nlohmann::json(nullptr);
    ces.push_back(std::move(j));
  }
  nlohmann::json j = {{"check_id", r.check_id},
                      {"passed", r.passed},
                      {"items_checked", r.items_checked},
                      {"counterexamples", std::move(ces)},
                      {"details", r.details}};
  if (with_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

}  // namespace extremal
