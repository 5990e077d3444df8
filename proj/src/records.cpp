#include "dfv/records.hpp"

#include <sstream>

#include "dfv/parallel.hpp"

namespace dfv {

OrbitRecord make_orbit_record(const CanonicalData& d, std::uint64_t seed, int trials, int bound) {
    OmegaPair w = d.reconstruct();
    OrbitRecord r;
    r.n = d.n;
    r.tau1 = w.tau1.str();
    r.tau2 = w.tau2.str();
    r.rpq = {d.r, d.p, d.q};
    r.phi_theta = phi_theta_comb(d);
    PhiAiii oracle = phi_oracle_aiii(w, seed, trials, bound);
    r.phi_theta_oracle = {oracle.lambda, oracle.mu};
    r.phi_minus_theta = oracle.exotic;
    r.ci = is_sigma_stable(w);
    ConormalFiber fiber = conormal_fiber_basis(w);
    r.fiber_dim = fiber.dim();
    r.orbit_dim = orbit_dimension(w, Flavor::AIII);
    r.flagged = r.phi_theta != r.phi_theta_oracle;
    return r;
}

std::vector<OrbitRecord> orbit_records(int n, bool ciOnly, std::uint64_t seed, int trials,
                                       int bound) {
    auto reps = enumerate_orbit_reps(n);
    if (ciOnly) {
        std::vector<CanonicalData> kept;
        for (auto& d : reps)
            if (is_sigma_stable(d.reconstruct())) kept.push_back(std::move(d));
        reps = std::move(kept);
    }
    std::vector<OrbitRecord> out(reps.size());
    parallel_for(reps.size(), [&](std::size_t i) {
        out[i] = make_orbit_record(reps[i], seed, trials, bound);
    });
    return out;
}

ordered_json partition_to_json(const Partition& p) {
    return ordered_json(p.parts());
}

Partition partition_from_json(const ordered_json& j) {
    return Partition(j.get<std::vector<int>>());
}

ordered_json tableau_to_json(const Tableau& t) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return rows;
}

ordered_json gen_rs_to_json(const GenRSTuple& t) {
    ordered_json j;
    j["hatT1"] = tableau_to_json(t.hatT1);
    j["hatT2"] = tableau_to_json(t.hatT2);
    j["lambda_prime"] = partition_to_json(t.lambda_prime);
    j["mu_prime"] = partition_to_json(t.mu_prime);
    j["nu"] = partition_to_json(t.nu);
    j["rpq"] = t.rpq;
    return j;
}

ordered_json orbit_record_to_json(const OrbitRecord& r) {
    ordered_json j;
    j["n"] = r.n;
    j["tau1"] = r.tau1;
    j["tau2"] = r.tau2;
    j["rpq"] = r.rpq;
    j["phi_theta"] = {partition_to_json(r.phi_theta.first), partition_to_json(r.phi_theta.second)};
    j["phi_theta_oracle"] = {partition_to_json(r.phi_theta_oracle.first),
                             partition_to_json(r.phi_theta_oracle.second)};
    j["phi_minus_theta"] = r.phi_minus_theta.strings();
    j["ci"] = r.ci;
    j["orbit_dim"] = r.orbit_dim;
    j["fiber_dim"] = r.fiber_dim;
    j["flagged"] = r.flagged;
    return j;
}

OrbitRecord orbit_record_from_json(const ordered_json& j) {
    OrbitRecord r;
    r.n = j.at("n").get<int>();
    r.tau1 = j.at("tau1").get<std::string>();
    r.tau2 = j.at("tau2").get<std::string>();
    auto rpq = j.at("rpq").get<std::vector<int>>();
    r.rpq = {rpq.at(0), rpq.at(1), rpq.at(2)};
    r.phi_theta = {partition_from_json(j.at("phi_theta").at(0)),
                   partition_from_json(j.at("phi_theta").at(1))};
    r.phi_theta_oracle = {partition_from_json(j.at("phi_theta_oracle").at(0)),
                          partition_from_json(j.at("phi_theta_oracle").at(1))};
    r.phi_minus_theta = SignedYoungDiagram::parse(j.at("phi_minus_theta").get<std::vector<std::string>>());
    r.ci = j.at("ci").get<bool>();
    r.orbit_dim = j.at("orbit_dim").get<int>();
    r.fiber_dim = j.at("fiber_dim").get<int>();
    r.flagged = j.at("flagged").get<bool>();
    return r;
}

ordered_json conjecture_report_to_json(const ConjectureReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["total"] = r.total;
    j["sigma_stable"] = r.sigma_stable;
    j["passed"] = r.passed;
    ordered_json failed = ordered_json::array();
    for (const auto& res : r.failed) {
        ordered_json f;
        f["tau1"] = res.tau1;
        f["tau2"] = res.tau2;
        f["genericity_failure"] = res.genericity_failure;
        f["message"] = res.message;
        if (!res.genericity_failure) {
            f["aiii_lambda"] = partition_to_json(res.aiii.lambda);
            f["aiii_mu"] = partition_to_json(res.aiii.mu);
            f["aiii_exotic"] = res.aiii.exotic.strings();
            f["ci_lambda"] = partition_to_json(res.ci.lambda);
            f["ci_exotic"] = res.ci.exotic.strings();
        }
        failed.push_back(std::move(f));
    }
    j["failed"] = std::move(failed);
    return j;
}

std::string records_to_json(const std::vector<OrbitRecord>& records) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& r : records) arr.push_back(orbit_record_to_json(r));
    j["records"] = std::move(arr);
    return j.dump(2) + "\n";
}

namespace {

const char* kCsvHeader = "n,tau1,tau2,rpq,phi_theta,phi_theta_oracle,phi_minus_theta,ci,orbit_dim,fiber_dim,flagged";

std::string csvQuote(const std::string& field) {
    bool needs = field.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> csvSplitLine(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

std::string records_to_csv(const std::vector<OrbitRecord>& records) {
    std::ostringstream os;
    os << kCsvHeader << "\n";
    for (const auto& r : records) {
        ordered_json j = orbit_record_to_json(r);
        os << r.n << ',' << csvQuote(r.tau1) << ',' << csvQuote(r.tau2) << ','
           << csvQuote(j["rpq"].dump()) << ',' << csvQuote(j["phi_theta"].dump()) << ','
           << csvQuote(j["phi_theta_oracle"].dump()) << ','
           << csvQuote(j["phi_minus_theta"].dump()) << ',' << (r.ci ? "true" : "false") << ','
           << r.orbit_dim << ',' << r.fiber_dim << ',' << (r.flagged ? "true" : "false") << "\n";
    }
    return os.str();
}

std::vector<OrbitRecord> records_from_csv(const std::string& csv) {
    std::istringstream is(csv);
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader)
        throw std::invalid_argument("records_from_csv: bad header");
    std::vector<OrbitRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = csvSplitLine(line);
        if (f.size() != 11) throw std::invalid_argument("records_from_csv: bad field count");
        ordered_json j;
        j["n"] = std::stoi(f[0]);
        j["tau1"] = f[1];
        j["tau2"] = f[2];
        j["rpq"] = ordered_json::parse(f[3]);
        j["phi_theta"] = ordered_json::parse(f[4]);
        j["phi_theta_oracle"] = ordered_json::parse(f[5]);
        j["phi_minus_theta"] = ordered_json::parse(f[6]);
        j["ci"] = f[7] == "true";
        j["orbit_dim"] = std::stoi(f[8]);
        j["fiber_dim"] = std::stoi(f[9]);
        j["flagged"] = f[10] == "true";
        out.push_back(orbit_record_from_json(j));
    }
    return out;
}

}  // namespace dfv
