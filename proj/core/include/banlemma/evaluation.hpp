#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "banlemma/pos.hpp"

namespace banlemma {

struct PosBucket {
    std::size_t total = 0;
    std::size_t correct = 0;

    bool operator==(const PosBucket&) const = default;
};

// Precision/recall/F1 for one side of the inflected / non-inflected split.
// support counts the gold positives of the split.
struct SplitMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t support = 0;

    bool operator==(const SplitMetrics&) const = default;
};

struct EvalReport {
    std::size_t total = 0;
    std::size_t correct = 0;
    std::map<PosClass, PosBucket> per_pos;  // only populated buckets
    SplitMetrics inflected;
    SplitMetrics non_inflected;

    double accuracy() const;  // correct/total; call only when total > 0

    bool operator==(const EvalReport&) const = default;
};

struct GoldToken {
    std::string surface;
    PosClass pos = PosClass::Other;
    std::string gold_lemma;
};

// Exact string match after NFC; buckets keyed by gold PoS. Throws
// AlignmentError when the streams differ in length.
//
// Inflectedness is judged against the surface: a token is gold-inflected
// when gold_lemma != surface, system-positive when the prediction changed
// the surface. Each split's precision divides by system positives and
// recall by gold positives of that split.
EvalReport score(std::span<const GoldToken> gold,
                 std::span<const std::string> predictions);

enum class ReportFormat { Table, Json };

// Table: PoS rows then Overall, accuracy as percent with two decimals.
// Json: machine-readable raw fractions; parse_report inverts it.
std::string render_report(const EvalReport& report, ReportFormat format);

EvalReport parse_report(std::string_view json_text);

}  // namespace banlemma
