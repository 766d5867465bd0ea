#include "jacring/report.hpp"

#include <ostream>
#include <sstream>

namespace jacring {

nlohmann::json CheckReport::to_json() const {
    nlohmann::json j;
    j["instance_digest"] = instance_digest;
    j["check_name"] = check_name;
    j["parameters"] = parameters;
    j["observed"] = observed;
    j["expected"] = expected;
    j["verdict"] = verdict_str(verdict);
    j["timing_ms"] = timing_ms;
    j["seed"] = seed;
    j["primes_used"] = primes_used;
    return j;
}

void ReportSink::emit(const CheckReport& r) {
    out_ << r.to_json().dump() << "\n";
    counts_[verdict_str(r.verdict)]++;
}

bool ReportSink::any_fail() const {
    auto it = counts_.find("FAIL");
    return it != counts_.end() && it->second > 0;
}

nlohmann::json ReportSink::summary() const {
    nlohmann::json j;
    for (const auto& [k, v] : counts_) j[k] = v;
    return j;
}

std::string ReportSink::summary_csv() const {
    std::ostringstream ss;
    ss << "verdict,count\n";
    for (const auto& [k, v] : counts_) ss << k << "," << v << "\n";
    return ss.str();
}

}  // namespace jacring
