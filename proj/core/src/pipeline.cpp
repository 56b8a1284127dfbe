#include "banlemma/pipeline.hpp"

#include <unicode/utf8.h>

#include <istream>
#include <ostream>
#include <sstream>

#include "banlemma/errors.hpp"
#include "banlemma/text.hpp"

namespace banlemma {

LemmatizedSentence lemmatize_sentence(std::span<const TaggedToken> sentence,
                                      const ResourceBundle& resources) {
    LemmatizedSentence out;
    out.tokens.reserve(sentence.size());
    for (const TaggedToken& token : sentence) {
        LemmaResult result = lemmatize_word(token.surface, token.pos, resources);
        if (!out.rendered.empty()) out.rendered.push_back(' ');
        out.rendered += result.lemma;
        out.tokens.emplace_back(token, std::move(result));
    }
    return out;
}

namespace {

// Splits a whitespace token into leading punctuation, core, trailing
// punctuation; each punctuation codepoint becomes its own token.
void detach_punctuation(const std::string& token, std::vector<std::string>& out) {
    const auto* bytes = reinterpret_cast<const uint8_t*>(token.data());
    int32_t length = static_cast<int32_t>(token.size());

    std::vector<std::pair<int32_t, int32_t>> codepoints;  // byte offset, size
    int32_t i = 0;
    while (i < length) {
        int32_t start = i;
        UChar32 cp;
        U8_NEXT(bytes, i, length, cp);
        codepoints.emplace_back(start, i - start);
    }

    auto punct_at = [&](std::size_t index) {
        auto [offset, size] = codepoints[index];
        UChar32 cp;
        int32_t pos = 0;
        U8_GET(bytes + offset, 0, pos, size, cp);
        return cp >= 0 && text::is_detachable_punct(static_cast<char32_t>(cp));
    };

    std::size_t begin = 0;
    std::size_t end = codepoints.size();
    while (begin < end && punct_at(begin)) ++begin;
    while (end > begin && punct_at(end - 1)) --end;

    auto emit = [&](std::size_t index) {
        auto [offset, size] = codepoints[index];
        out.push_back(token.substr(offset, size));
    };
    for (std::size_t k = 0; k < begin; ++k) emit(k);
    if (begin < end) {
        int32_t from = codepoints[begin].first;
        int32_t to = codepoints[end - 1].first + codepoints[end - 1].second;
        out.push_back(token.substr(from, to - from));
    }
    for (std::size_t k = end; k < codepoints.size(); ++k) emit(k);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view raw, bool strip_invisibles) {
    std::string normalized = text::nfc(raw);
    if (strip_invisibles) normalized = text::strip_invisibles(normalized);
    std::vector<std::string> tokens;
    for (const std::string& chunk : text::split_whitespace(normalized)) {
        detach_punctuation(chunk, tokens);
    }
    return tokens;
}

std::vector<TaggedToken> TaggerSource::tag_text(std::string_view raw,
                                                bool strip_invisibles) const {
    return tag(tokenize(raw, strip_invisibles));
}

std::vector<TaggedToken> LookupTagger::tag(std::span<const std::string> tokens) const {
    // fixed search order; first cluster containing the token wins
    static constexpr std::array<PosClass, 6> kSearchOrder = {
        PosClass::Noun,      PosClass::Verb,   PosClass::Pronoun,
        PosClass::Adjective, PosClass::Adverb, PosClass::Postposition};

    std::vector<TaggedToken> tagged;
    tagged.reserve(tokens.size());
    for (const std::string& token : tokens) {
        PosClass pos = PosClass::Other;
        for (PosClass candidate : kSearchOrder) {
            const LemmaCluster* cluster = resources_.dictionary.cluster(candidate);
            if (cluster != nullptr && cluster->contains(token)) {
                pos = candidate;
                break;
            }
        }
        tagged.push_back({token, pos, std::nullopt});
    }
    return tagged;
}

std::vector<TaggedToken> builtin_lookup_tagger(std::string_view sentence,
                                               const ResourceBundle& resources,
                                               bool strip_invisibles) {
    return LookupTagger(resources).tag_text(sentence, strip_invisibles);
}

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            return fields;
        }
        fields.emplace_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

void report(std::vector<Warning>* warnings, std::size_t line_no, std::string message) {
    if (warnings != nullptr) warnings->push_back({line_no, std::move(message)});
}

}  // namespace

std::vector<AnnotatedSentence> read_annotated_tsv(std::istream& in,
                                                  const ReadOptions& options,
                                                  std::vector<Warning>* warnings) {
    std::vector<AnnotatedSentence> sentences;
    AnnotatedSentence current;
    std::string line;
    std::size_t line_no = 0;

    auto flush = [&] {
        if (!current.tokens.empty()) {
            sentences.push_back(std::move(current));
            current = {};
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush();
            continue;
        }
        if (line.front() == '#') continue;

        std::vector<std::string> fields = split_tabs(line);
        if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() ||
            fields[1].empty()) {
            std::string message = "line " + std::to_string(line_no) +
                                  ": expected surface<TAB>pos_tag[<TAB>gold_lemma], got " +
                                  std::to_string(fields.size()) + " field(s)";
            if (options.strict) throw MalformedLine(line_no, message);
            report(warnings, line_no, message);
            continue;
        }

        AnnotatedToken token;
        token.surface = text::nfc(fields[0]);
        if (options.strip_invisibles) token.surface = text::strip_invisibles(token.surface);
        token.pos_tag = text::nfc(fields[1]);
        if (fields.size() == 3) token.gold_lemma = text::nfc(fields[2]);
        token.line_no = line_no;
        if (token.surface.empty()) {
            std::string message = "line " + std::to_string(line_no) + ": empty surface";
            if (options.strict) throw MalformedLine(line_no, message);
            report(warnings, line_no, message);
            continue;
        }
        current.tokens.push_back(std::move(token));
    }
    flush();
    return sentences;
}

std::vector<TaggedToken> project_tokens(const AnnotatedSentence& sentence,
                                        const PosProjection& projection,
                                        bool strict,
                                        std::vector<Warning>* warnings) {
    std::vector<TaggedToken> tokens;
    tokens.reserve(sentence.tokens.size());
    for (const AnnotatedToken& token : sentence.tokens) {
        std::optional<PosClass> pos = projection.lookup(token.pos_tag);
        if (!pos) {
            std::string message = "line " + std::to_string(token.line_no) +
                                  ": unknown PoS tag '" + token.pos_tag + "'";
            if (strict) throw UnknownPosTag(token.line_no, message);
            report(warnings, token.line_no, message);
            pos = projection.default_class;
        }
        tokens.push_back({token.surface, *pos, token.pos_tag});
    }
    return tokens;
}

FileLemmatization lemmatize_tagged_file(std::istream& in,
                                        const ResourceBundle& resources,
                                        const ReadOptions& options) {
    FileLemmatization run;
    run.sentences = read_annotated_tsv(in, options, &run.warnings);
    run.results.reserve(run.sentences.size());
    for (const AnnotatedSentence& sentence : run.sentences) {
        std::vector<TaggedToken> tokens =
            project_tokens(sentence, resources.projection, options.strict, &run.warnings);
        run.results.push_back(lemmatize_sentence(tokens, resources));
    }
    return run;
}

void write_annotated_tsv(std::ostream& out, const FileLemmatization& run) {
    for (std::size_t s = 0; s < run.sentences.size(); ++s) {
        if (s > 0) out << '\n';
        const AnnotatedSentence& sentence = run.sentences[s];
        const LemmatizedSentence& result = run.results[s];
        for (std::size_t t = 0; t < sentence.tokens.size(); ++t) {
            const AnnotatedToken& token = sentence.tokens[t];
            out << token.surface << '\t' << token.pos_tag;
            if (token.gold_lemma) out << '\t' << *token.gold_lemma;
            out << '\t' << result.tokens[t].second.lemma << '\n';
        }
    }
}

}  // namespace banlemma
