// banlemma CLI: lemmatize Bangla text, score gold files, inspect single
// words. See README.md for the file formats.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "banlemma/errors.hpp"
#include "banlemma/evaluation.hpp"
#include "banlemma/lemmatizer.hpp"
#include "banlemma/pipeline.hpp"
#include "banlemma/resources.hpp"
#include "banlemma/text.hpp"

namespace fs = std::filesystem;
using namespace banlemma;

namespace {

struct CliConfig {
    std::string dict_path;
    std::string markers_path;
    std::string verbs_path;
    std::string projection_path;
    std::string input_path;   // empty = stdin
    std::string output_path;  // empty = stdout
    bool strict = false;
    bool strip_invisibles = false;
    bool raw = false;
    std::string format = "table";
    std::string word;
    std::string pos;
};

std::string env_or(const char* name, const std::string& fallback) {
    const char* value = std::getenv(name);
    return value != nullptr && *value != '\0' ? value : fallback;
}

// flag > environment > bundled default
void resolve_paths(CliConfig& config) {
    fs::path data_dir = env_or("BANLEMMA_DATA_DIR", BANLEMMA_DEFAULT_DATA_DIR);
    if (config.dict_path.empty()) {
        config.dict_path = env_or("BANLEMMA_DICT", (data_dir / "dictionary.json").string());
    }
    if (config.markers_path.empty()) {
        config.markers_path = env_or("BANLEMMA_MARKERS", (data_dir / "markers.json").string());
    }
    if (config.verbs_path.empty()) {
        config.verbs_path = env_or("BANLEMMA_VERBS", (data_dir / "verbs.json").string());
    }
    for (const std::string& path : {config.dict_path, config.markers_path, config.verbs_path}) {
        if (!fs::exists(path)) {
            throw IoError("resource file does not exist: " + path);
        }
    }
    if (!config.projection_path.empty() && !fs::exists(config.projection_path)) {
        throw IoError("projection file does not exist: " + config.projection_path);
    }
}

ResourceBundle load_bundle(CliConfig& config) {
    resolve_paths(config);
    std::optional<fs::path> projection;
    if (!config.projection_path.empty()) projection = config.projection_path;
    return load_resources(config.dict_path, config.markers_path, config.verbs_path,
                          projection);
}

std::string read_input(const CliConfig& config) {
    if (config.input_path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(config.input_path, std::ios::binary);
    if (!in) throw IoError("cannot open input: " + config.input_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const CliConfig& config, const std::string& content) {
    if (config.output_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw IoError("cannot open output: " + config.output_path);
    out << content;
}

void print_warnings(const std::vector<Warning>& warnings) {
    for (const Warning& warning : warnings) {
        std::cerr << "warning: " << warning.message << "\n";
    }
}

int cmd_lemmatize(CliConfig& config) {
    ResourceBundle resources = load_bundle(config);
    std::string input = read_input(config);
    std::ostringstream out;

    if (config.raw) {
        std::istringstream lines(input);
        std::string line;
        while (std::getline(lines, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            auto tagged = builtin_lookup_tagger(line, resources, config.strip_invisibles);
            out << lemmatize_sentence(tagged, resources).rendered << "\n";
        }
    } else {
        std::istringstream in(input);
        FileLemmatization run = lemmatize_tagged_file(
            in, resources, {.strict = config.strict, .strip_invisibles = config.strip_invisibles});
        print_warnings(run.warnings);
        std::ostringstream tsv;
        write_annotated_tsv(tsv, run);
        out << tsv.str();
    }
    write_output(config, out.str());
    return 0;
}

int cmd_eval(CliConfig& config) {
    ResourceBundle resources = load_bundle(config);
    std::string input = read_input(config);
    std::istringstream in(input);

    // eval is strict unless explicitly relaxed
    ReadOptions options{.strict = config.strict, .strip_invisibles = config.strip_invisibles};
    std::vector<Warning> warnings;
    auto sentences = read_annotated_tsv(in, options, &warnings);

    std::vector<GoldToken> gold;
    std::vector<std::string> predictions;
    for (const AnnotatedSentence& sentence : sentences) {
        auto tokens = project_tokens(sentence, resources.projection, options.strict, &warnings);
        LemmatizedSentence result = lemmatize_sentence(tokens, resources);
        for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
            const AnnotatedToken& token = sentence.tokens[i];
            if (!token.gold_lemma) {
                std::string message = "line " + std::to_string(token.line_no) +
                                      ": missing gold lemma";
                if (options.strict) throw MalformedLine(token.line_no, message);
                warnings.push_back({token.line_no, message});
                continue;
            }
            gold.push_back({token.surface, tokens[i].pos, *token.gold_lemma});
            predictions.push_back(result.tokens[i].second.lemma);
        }
    }
    print_warnings(warnings);

    EvalReport report = score(gold, predictions);
    write_output(config, render_report(report, config.format == "json"
                                                   ? ReportFormat::Json
                                                   : ReportFormat::Table));
    return 0;
}

int cmd_strip(CliConfig& config) {
    ResourceBundle resources = load_bundle(config);
    std::string word = text::nfc(config.word);
    if (config.strip_invisibles) word = text::strip_invisibles(word);
    PosClass pos = resources.projection.project(config.pos);
    LemmaResult result = lemmatize_word(word, pos, resources);

    std::ostringstream out;
    if (config.format == "json") {
        nlohmann::json doc;
        doc["word"] = word;
        doc["pos"] = std::string(pos_name(pos));
        doc["lemma"] = result.lemma;
        doc["source"] = std::string(source_name(result.source));
        nlohmann::json trace = nlohmann::json::array();
        for (const TraceEntry& entry : result.trace) {
            trace.push_back(entry.label + ":" + entry.stripped);
        }
        doc["trace"] = trace;
        out << doc.dump(2) << "\n";
    } else {
        out << "word:   " << word << "\n";
        out << "pos:    " << pos_name(pos) << "\n";
        out << "lemma:  " << result.lemma << "\n";
        out << "source: " << source_name(result.source) << "\n";
        out << "trace: ";
        if (result.trace.empty()) {
            out << " (none)";
        } else {
            for (const TraceEntry& entry : result.trace) {
                out << " " << entry.label << ":" << entry.stripped;
            }
        }
        out << "\n";
    }
    write_output(config, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rule-and-dictionary Bangla lemmatizer"};
    app.require_subcommand(1);

    CliConfig config;
    CLI::Option* eval_strict_flag = nullptr;
    auto add_shared = [&](CLI::App* cmd) {
        cmd->add_option("--dict", config.dict_path, "Dictionary JSON path");
        cmd->add_option("--markers", config.markers_path, "Marker inventory JSON path");
        cmd->add_option("--verbs", config.verbs_path, "Verb resources JSON path");
        cmd->add_option("--projection", config.projection_path, "PoS projection JSON path");
        CLI::Option* strict = cmd->add_flag("--strict,!--lenient", config.strict,
                                            "Fail on malformed lines and unknown tags");
        cmd->add_flag("--strip-invisibles", config.strip_invisibles,
                      "Remove ZWJ/ZWNJ/ZWSP before matching");
        cmd->add_option("--format", config.format, "Output format")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--input", config.input_path, "Input path (default stdin)");
        cmd->add_option("--output", config.output_path, "Output path (default stdout)");
        return strict;
    };

    CLI::App* lemmatize = app.add_subcommand(
        "lemmatize", "Lemmatize a tagged TSV file, or raw lines with --raw");
    add_shared(lemmatize);
    lemmatize->add_flag("--raw", config.raw,
                        "Treat input as raw sentences, one per line");

    CLI::App* eval = app.add_subcommand(
        "eval", "Score a gold TSV (surface, pos, gold_lemma) and print a report");
    eval_strict_flag = add_shared(eval);
    CLI::App* strip = app.add_subcommand("strip", "Show the marker trace for one word");
    add_shared(strip);
    strip->add_option("word", config.word, "Word to lemmatize")->required();
    strip->add_option("--pos", config.pos, "PoS class or narrow tag")->required();

    CLI11_PARSE(app, argc, argv);

    // evaluation must not silently skip tokens: strict unless overridden
    if (eval->parsed() && eval_strict_flag->count() == 0) {
        config.strict = true;
    }

    try {
        if (lemmatize->parsed()) return cmd_lemmatize(config);
        if (eval->parsed()) return cmd_eval(config);
        if (strip->parsed()) return cmd_strip(config);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
