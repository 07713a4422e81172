#pragma once

#include <string>
#include <vector>

namespace symk {

/// Outcome of one verification check. `anchor` names the mathematical
/// statement being checked, so a failing report line identifies the claim.
struct CheckRecord {
  enum class Status { pass, fail, error };
  std::string id;
  std::string anchor;
  Status status = Status::pass;
  std::string lhs;  // canonical form, filled on failure (and where cheap)
  std::string rhs;
  double ms = 0.0;

  bool ok() const { return status == Status::pass; }
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;

  bool all_passed() const;
  int count(CheckRecord::Status s) const;
  void append(const Report& other);

  std::string to_json() const;
  static Report from_json(const std::string& text);
  std::string to_table() const;
};

const char* status_name(CheckRecord::Status s);

/// Runs `body` as one named check: a false return fails, an exception errors
/// (with the message in `lhs`), and the wall time is recorded.
template <class Body>
CheckRecord run_check(const std::string& id, const std::string& anchor, Body&& body);

}  // namespace symk

#include <chrono>
#include <exception>

namespace symk {

template <class Body>
CheckRecord run_check(const std::string& id, const std::string& anchor, Body&& body) {
  CheckRecord rec;
  rec.id = id;
  rec.anchor = anchor;
  auto start = std::chrono::steady_clock::now();
  try {
    rec.status = body(rec) ? CheckRecord::Status::pass : CheckRecord::Status::fail;
  } catch (const std::exception& e) {
    rec.status = CheckRecord::Status::error;
    rec.lhs = e.what();
  }
  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace symk
