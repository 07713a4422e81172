#include "symk/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "symk/error.hpp"

namespace symk {

using nlohmann::json;

const char* status_name(CheckRecord::Status s) {
  switch (s) {
    case CheckRecord::Status::pass:
      return "pass";
    case CheckRecord::Status::fail:
      return "fail";
    case CheckRecord::Status::error:
      return "error";
  }
  return "?";
}

bool Report::all_passed() const {
  for (const auto& r : records)
    if (!r.ok()) return false;
  return true;
}

int Report::count(CheckRecord::Status s) const {
  int n = 0;
  for (const auto& r : records)
    if (r.status == s) ++n;
  return n;
}

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

std::string Report::to_json() const {
  json checks = json::array();
  for (const auto& r : records) {
    checks.push_back({{"id", r.id},
                      {"anchor", r.anchor},
                      {"status", status_name(r.status)},
                      {"lhs", r.lhs},
                      {"rhs", r.rhs},
                      {"ms", r.ms}});
  }
  json doc = {{"suite", suite},
              {"checks", checks},
              {"summary",
               {{"pass", count(CheckRecord::Status::pass)},
                {"fail", count(CheckRecord::Status::fail)},
                {"error", count(CheckRecord::Status::error)}}},
              {"ok", all_passed()}};
  return doc.dump(2);
}

Report Report::from_json(const std::string& text) {
  json doc = json::parse(text);
  Report rep;
  rep.suite = doc.at("suite").get<std::string>();
  for (const auto& c : doc.at("checks")) {
    CheckRecord rec;
    rec.id = c.at("id").get<std::string>();
    rec.anchor = c.at("anchor").get<std::string>();
    std::string st = c.at("status").get<std::string>();
    if (st == "pass")
      rec.status = CheckRecord::Status::pass;
    else if (st == "fail")
      rec.status = CheckRecord::Status::fail;
    else if (st == "error")
      rec.status = CheckRecord::Status::error;
    else
      throw Error("unknown status '" + st + "' in report JSON");
    rec.lhs = c.at("lhs").get<std::string>();
    rec.rhs = c.at("rhs").get<std::string>();
    rec.ms = c.at("ms").get<double>();
    rep.records.push_back(std::move(rec));
  }
  // summary and ok are derived; re-derive and cross-check
  if (doc.at("ok").get<bool>() != rep.all_passed()) throw Error("inconsistent 'ok' flag in report JSON");
  return rep;
}

std::string Report::to_table() const {
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  for (const auto& r : records) {
    os << "  [" << std::setw(5) << status_name(r.status) << "] " << r.id << "  (" << std::fixed
       << std::setprecision(1) << r.ms << " ms)  " << r.anchor << "\n";
    if (!r.ok()) {
      if (!r.lhs.empty()) os << "          lhs: " << r.lhs << "\n";
      if (!r.rhs.empty()) os << "          rhs: " << r.rhs << "\n";
    }
  }
  os << "  " << count(CheckRecord::Status::pass) << " passed, " << count(CheckRecord::Status::fail)
     << " failed, " << count(CheckRecord::Status::error) << " errored\n";
  return os.str();
}

}  // namespace symk
