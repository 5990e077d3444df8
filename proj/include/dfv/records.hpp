#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "dfv/ci.hpp"
#include "dfv/gen_rs.hpp"

namespace dfv {

using ordered_json = nlohmann::ordered_json;

/// Serialized bundle for one class, as exported by the CLI.
struct OrbitRecord {
    int n = 0;
    std::string tau1, tau2;
    std::array<int, 3> rpq{};
    std::pair<Partition, Partition> phi_theta;         // combinatorial
    std::pair<Partition, Partition> phi_theta_oracle;  // geometric
    SignedYoungDiagram phi_minus_theta;                // geometric
    bool ci = false;
    int orbit_dim = 0;
    int fiber_dim = 0;
    bool flagged = false;  // set when the two phi_theta routes disagree

    friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

OrbitRecord make_orbit_record(const CanonicalData& d, std::uint64_t seed,
                              int trials = kDefaultTrials, int bound = kDefaultBound);

/// One record per class at rank n, in the stable class order; ciOnly keeps the
/// sigma-stable classes. Work is spread across threads; output is scheduling
/// independent.
std::vector<OrbitRecord> orbit_records(int n, bool ciOnly, std::uint64_t seed,
                                       int trials = kDefaultTrials, int bound = kDefaultBound);

ordered_json partition_to_json(const Partition& p);
Partition partition_from_json(const ordered_json& j);
ordered_json tableau_to_json(const Tableau& t);
ordered_json gen_rs_to_json(const GenRSTuple& t);
ordered_json orbit_record_to_json(const OrbitRecord& r);
OrbitRecord orbit_record_from_json(const ordered_json& j);
ordered_json conjecture_report_to_json(const ConjectureReport& r);

std::string records_to_json(const std::vector<OrbitRecord>& records);
std::string records_to_csv(const std::vector<OrbitRecord>& records);
std::vector<OrbitRecord> records_from_csv(const std::string& csv);

}  // namespace dfv
