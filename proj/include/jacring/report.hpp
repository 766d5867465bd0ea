#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "jacring/checks.hpp"

namespace jacring {

// One machine-readable check result, streamed as newline-delimited JSON.
struct CheckReport {
    std::string instance_digest;
    std::string check_name;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json observed;
    nlohmann::json expected;
    Verdict verdict = Verdict::Observed;
    double timing_ms = 0.0;
    uint64_t seed = 0;
    std::vector<uint64_t> primes_used;

    nlohmann::json to_json() const;
};

// Streams reports and keeps verdict counts for the summary / exit status.
class ReportSink {
  public:
    explicit ReportSink(std::ostream& out) : out_(out) {}

    void emit(const CheckReport& r);
    const std::map<std::string, long long>& counts() const { return counts_; }
    bool any_fail() const;
    nlohmann::json summary() const;
    std::string summary_csv() const;

  private:
    std::ostream& out_;
    std::map<std::string, long long> counts_;
};

}  // namespace jacring
