#include "banlemma/evaluation.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "banlemma/errors.hpp"

namespace banlemma {

namespace {

using nlohmann::json;

double ratio(std::size_t numerator, std::size_t denominator) {
    return denominator == 0 ? 0.0 : static_cast<double>(numerator) / denominator;
}

double harmonic(double p, double r) {
    return (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

std::string percent(double fraction) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", fraction * 100.0);
    return buffer;
}

std::string fixed4(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f", value);
    return buffer;
}

}  // namespace

double EvalReport::accuracy() const {
    return ratio(correct, total);
}

EvalReport score(std::span<const GoldToken> gold,
                 std::span<const std::string> predictions) {
    if (gold.size() != predictions.size()) {
        throw AlignmentError("gold has " + std::to_string(gold.size()) +
                             " tokens but predictions have " +
                             std::to_string(predictions.size()));
    }

    EvalReport report;
    std::size_t pred_changed = 0, pred_changed_correct = 0;
    std::size_t gold_changed = 0, gold_changed_correct = 0;
    std::size_t pred_same = 0, pred_same_correct = 0;
    std::size_t gold_same = 0, gold_same_correct = 0;

    for (std::size_t i = 0; i < gold.size(); ++i) {
        const GoldToken& token = gold[i];
        const std::string& predicted = predictions[i];
        bool match = predicted == token.gold_lemma;

        ++report.total;
        PosBucket& bucket = report.per_pos[token.pos];
        ++bucket.total;
        if (match) {
            ++report.correct;
            ++bucket.correct;
        }

        bool gold_inflected = token.gold_lemma != token.surface;
        bool pred_inflected = predicted != token.surface;
        if (pred_inflected) {
            ++pred_changed;
            if (match) ++pred_changed_correct;
        } else {
            ++pred_same;
            if (match) ++pred_same_correct;
        }
        if (gold_inflected) {
            ++gold_changed;
            if (match) ++gold_changed_correct;
        } else {
            ++gold_same;
            if (match) ++gold_same_correct;
        }
    }

    report.inflected.precision = ratio(pred_changed_correct, pred_changed);
    report.inflected.recall = ratio(gold_changed_correct, gold_changed);
    report.inflected.f1 = harmonic(report.inflected.precision, report.inflected.recall);
    report.inflected.support = gold_changed;

    report.non_inflected.precision = ratio(pred_same_correct, pred_same);
    report.non_inflected.recall = ratio(gold_same_correct, gold_same);
    report.non_inflected.f1 =
        harmonic(report.non_inflected.precision, report.non_inflected.recall);
    report.non_inflected.support = gold_same;

    return report;
}

namespace {

json split_to_json(const SplitMetrics& split) {
    return {{"precision", split.precision},
            {"recall", split.recall},
            {"f1", split.f1},
            {"support", split.support}};
}

SplitMetrics split_from_json(const json& value) {
    SplitMetrics split;
    split.precision = value.at("precision").get<double>();
    split.recall = value.at("recall").get<double>();
    split.f1 = value.at("f1").get<double>();
    split.support = value.at("support").get<std::size_t>();
    return split;
}

}  // namespace

std::string render_report(const EvalReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        json root;
        root["total"] = report.total;
        root["correct"] = report.correct;
        if (report.total > 0) root["accuracy"] = report.accuracy();
        json per_pos = json::object();
        for (const auto& [pos, bucket] : report.per_pos) {
            if (bucket.total == 0) continue;
            json entry = {{"total", bucket.total}, {"correct", bucket.correct}};
            entry["accuracy"] = ratio(bucket.correct, bucket.total);
            per_pos[std::string(pos_name(pos))] = entry;
        }
        root["per_pos"] = per_pos;
        root["split_metrics"] = {{"inflected", split_to_json(report.inflected)},
                                 {"non_inflected", split_to_json(report.non_inflected)}};
        return root.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "PoS            Total  Correct  Accuracy (%)\n";
    auto row = [&](std::string_view name, std::size_t total, std::size_t correct) {
        char line[96];
        std::snprintf(line, sizeof(line), "%-14s %5zu  %7zu  %12s\n",
                      std::string(name).c_str(), total, correct,
                      total > 0 ? percent(ratio(correct, total)).c_str() : "-");
        out << line;
    };
    for (PosClass pos : kAllPosClasses) {
        auto it = report.per_pos.find(pos);
        if (it == report.per_pos.end() || it->second.total == 0) continue;
        row(pos_display_name(pos), it->second.total, it->second.correct);
    }
    row("Overall", report.total, report.correct);

    out << "\nSplit          Precision  Recall  F1      Support\n";
    auto split_row = [&](std::string_view name, const SplitMetrics& split) {
        char line[96];
        std::snprintf(line, sizeof(line), "%-14s %9s  %6s  %6s  %7zu\n",
                      std::string(name).c_str(), fixed4(split.precision).c_str(),
                      fixed4(split.recall).c_str(), fixed4(split.f1).c_str(),
                      split.support);
        out << line;
    };
    split_row("Non-inflected", report.non_inflected);
    split_row("Inflected", report.inflected);
    return out.str();
}

EvalReport parse_report(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw MalformedResource(std::string("report: ") + e.what());
    }
    try {
        EvalReport report;
        report.total = root.at("total").get<std::size_t>();
        report.correct = root.at("correct").get<std::size_t>();
        for (const auto& [name, entry] : root.at("per_pos").items()) {
            auto pos = parse_pos_class(name);
            if (!pos) throw MalformedResource("report: unknown PoS '" + name + "'");
            PosBucket bucket;
            bucket.total = entry.at("total").get<std::size_t>();
            bucket.correct = entry.at("correct").get<std::size_t>();
            report.per_pos[*pos] = bucket;
        }
        const json& splits = root.at("split_metrics");
        report.inflected = split_from_json(splits.at("inflected"));
        report.non_inflected = split_from_json(splits.at("non_inflected"));
        return report;
    } catch (const json::exception& e) {
        throw MalformedResource(std::string("report: ") + e.what());
    }
}

}  // namespace banlemma
