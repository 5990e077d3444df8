#include "dfv/gen_rs.hpp"

namespace dfv {

namespace {

// Rect(a * b), skipping empty pieces.
Tableau rectProduct(const Tableau& a, const Tableau& b) {
    std::vector<Tableau> pieces;
    if (!a.empty()) pieces.push_back(a);
    if (!b.empty()) pieces.push_back(b);
    if (pieces.empty()) return Tableau();
    if (pieces.size() == 1) return pieces[0];
    return jdt_rectify(star_concat(pieces));
}

}  // namespace

GenRSTuple gen_rs(const CanonicalData& d) {
    auto [t1, t2] = rs_correspondence(d.sigma);
    Tableau tT1 = transpose_tableau(t1);
    Tableau tT2 = transpose_tableau(t2);

    Tableau mid1 = rectProduct(tT1, Tableau::column(d.L));
    Tableau mid2 = rectProduct(tT2, Tableau::column(d.M));

    GenRSTuple out;
    out.nu = tT1.shape();
    out.lambda_prime = mid1.shape();
    out.mu_prime = mid2.shape();
    out.hatT1 = rectProduct(Tableau::column(d.Lp), mid1);
    out.hatT2 = rectProduct(Tableau::column(d.Mp), mid2);
    out.rpq = {d.r, d.p, d.q};
    return out;
}

GenRSTuple gen_rs(const OmegaPair& w) {
    if (!is_valid_pair(w)) throw std::invalid_argument("gen_rs: pair has a zero column");
    return gen_rs(canonicalize(w).first);
}

std::pair<Partition, Partition> phi_theta_comb(const CanonicalData& d) {
    GenRSTuple t = gen_rs(d);
    return {t.hatT1.shape(), t.hatT2.shape()};
}

std::pair<Partition, Partition> phi_theta_comb(const OmegaPair& w) {
    if (!is_valid_pair(w)) throw std::invalid_argument("phi_theta_comb: pair has a zero column");
    return phi_theta_comb(canonicalize(w).first);
}

}  // namespace dfv
