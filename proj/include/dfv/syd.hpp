#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dfv/partition.hpp"

namespace dfv {

enum class Sign : char { Plus = '+', Minus = '-' };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// Signed Young diagram of signature (n, n): rows of alternating signs, n plus
/// and n minus boxes in total, held in canonical order (length descending,
/// '+' before '-') so that equality is multiset equality.
class SignedYoungDiagram {
public:
    struct Row {
        int length = 0;
        Sign leading = Sign::Plus;
        friend bool operator==(const Row&, const Row&) = default;
    };

    SignedYoungDiagram() = default;
    explicit SignedYoungDiagram(std::vector<Row> rows);

    /// Parses rows given as alternating sign strings, e.g. {"+-+", "-"}.
    static SignedYoungDiagram parse(const std::vector<std::string>& rows);
    std::vector<std::string> strings() const;

    const std::vector<Row>& rows() const { return rows_; }
    int totalBoxes() const;
    int plusCount() const;
    Partition shape() const;
    /// Half the box count; the diagram has signature (n, n).
    int n() const { return plusCount(); }

    friend bool operator==(const SignedYoungDiagram&, const SignedYoungDiagram&) = default;
    friend std::strong_ordering operator<=>(const SignedYoungDiagram& a,
                                            const SignedYoungDiagram& b);

private:
    std::vector<Row> rows_;
};

/// All signed Young diagrams of signature (n, n).
std::vector<SignedYoungDiagram> enumerate_syd(int n);

/// Condition for type CI: odd-length rows pair up with opposite leading signs.
bool is_ci_diagram(const SignedYoungDiagram& d);

/// Flips the leading sign of every odd-length row.
SignedYoungDiagram sigma_on_syd(const SignedYoungDiagram& d);

struct NilpotentLabelTheta {
    Partition lambda, mu;
    friend bool operator==(const NilpotentLabelTheta&, const NilpotentLabelTheta&) = default;
};

/// Orbit embedding in the theta direction: lambda maps to the pair (lambda, lambda).
NilpotentLabelTheta embed_nilpotent_label(const Partition& lam);

/// Orbit embedding in the -theta direction: identity inclusion, only defined on
/// CI diagrams; throws std::domain_error otherwise.
SignedYoungDiagram embed_nilpotent_label(const SignedYoungDiagram& d);

}  // namespace dfv
