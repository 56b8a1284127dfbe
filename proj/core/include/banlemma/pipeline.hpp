#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "banlemma/lemmatizer.hpp"
#include "banlemma/pos.hpp"
#include "banlemma/resources.hpp"

namespace banlemma {

// A surface word paired with its basic PoS class; the pipeline's unit of
// work. narrow_tag keeps the pre-projection tag for reporting.
struct TaggedToken {
    std::string surface;
    PosClass pos = PosClass::Other;
    std::optional<std::string> narrow_tag;

    bool operator==(const TaggedToken&) const = default;
};

struct LemmatizedSentence {
    std::vector<std::pair<TaggedToken, LemmaResult>> tokens;
    std::string rendered;  // lemmas joined with single spaces, token order
};

// Sentence-level lemmatization: dispatch each token by PoS, preserve order,
// render the space-joined lemma sentence.
LemmatizedSentence lemmatize_sentence(std::span<const TaggedToken> sentence,
                                      const ResourceBundle& resources);

// Raw-string tokenizer: Unicode-whitespace split, then leading/trailing
// punctuation detached as separate tokens. Output is NFC.
std::vector<std::string> tokenize(std::string_view raw, bool strip_invisibles = false);

// Seam for PoS taggers (human annotations, external toolkits, the bundled
// lookup tagger). On pre-tokenized input the output must contain exactly
// one TaggedToken per input token, in order.
class TaggerSource {
public:
    virtual ~TaggerSource() = default;

    virtual std::vector<TaggedToken> tag(std::span<const std::string> tokens) const = 0;

    // convenience: tokenize then tag
    std::vector<TaggedToken> tag_text(std::string_view raw,
                                      bool strip_invisibles = false) const;
};

// Tags each token with the class of the first dictionary cluster containing
// it (noun, verb, pronoun, adjective, adverb, postposition), else Other.
// Deterministic; exists so the CLI works without an external tagger.
class LookupTagger : public TaggerSource {
public:
    explicit LookupTagger(const ResourceBundle& resources) : resources_(resources) {}
    std::vector<TaggedToken> tag(std::span<const std::string> tokens) const override;

private:
    const ResourceBundle& resources_;
};

// Free-function form of LookupTagger over a raw sentence.
std::vector<TaggedToken> builtin_lookup_tagger(std::string_view sentence,
                                               const ResourceBundle& resources,
                                               bool strip_invisibles = false);

// ---- Annotated TSV ----
//
// One token per line: surface<TAB>pos_tag[<TAB>gold_lemma]. A blank line
// terminates a sentence, lines starting with '#' are comments, encoding is
// UTF-8. pos_tag may be a narrow tag or a basic class name.

struct AnnotatedToken {
    std::string surface;
    std::string pos_tag;
    std::optional<std::string> gold_lemma;
    std::size_t line_no = 0;
};

struct AnnotatedSentence {
    std::vector<AnnotatedToken> tokens;
};

struct ReadOptions {
    bool strict = false;
    bool strip_invisibles = false;
};

struct Warning {
    std::size_t line_no = 0;
    std::string message;
};

// Throws MalformedLine in strict mode; in lenient mode bad lines are
// reported through `warnings` and skipped. Token text is NFC-normalized.
std::vector<AnnotatedSentence> read_annotated_tsv(std::istream& in,
                                                  const ReadOptions& options = {},
                                                  std::vector<Warning>* warnings = nullptr);

// Projects pos_tag fields onto PosClass. Unknown tags throw UnknownPosTag
// in strict mode, otherwise warn and fall back to the projection default.
std::vector<TaggedToken> project_tokens(const AnnotatedSentence& sentence,
                                        const PosProjection& projection,
                                        bool strict = false,
                                        std::vector<Warning>* warnings = nullptr);

struct FileLemmatization {
    std::vector<AnnotatedSentence> sentences;
    std::vector<LemmatizedSentence> results;  // one per sentence, same order
    std::vector<Warning> warnings;
};

// Batch wrapper: read, project, lemmatize. One result per input sentence.
FileLemmatization lemmatize_tagged_file(std::istream& in,
                                        const ResourceBundle& resources,
                                        const ReadOptions& options = {});

// Mirrors the token lines with predicted_lemma appended; blank line between
// sentences.
void write_annotated_tsv(std::ostream& out, const FileLemmatization& run);

}  // namespace banlemma
