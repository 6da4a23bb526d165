#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace retro {

/// Half-open character range [start, end) within some enclosing text.
struct TextSpan {
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==(const TextSpan&, const TextSpan&) = default;
};

struct Document {
    std::string id;
    std::string title;
    std::string text;
};

/// Chunked unit of retrieval text. `id` is "<doc_id>:<ordinal>";
/// `sentence_spans` address this passage's own text and are separated by
/// single join spaces. `word_count` counts whitespace-delimited tokens.
struct Passage {
    std::string id;
    std::string doc_id;
    std::string text;
    std::string title;
    std::vector<TextSpan> sentence_spans;
    int word_count = 0;
};

struct QAPair {
    std::string question;
    std::vector<std::string> answers;
    std::optional<std::string> gold_passage_id;
};

enum class CorpusFormat { tsv, jsonl };

/// Reads documents from a TSV (`id<TAB>text<TAB>title`, title optional) or
/// JSONL ({"id","text","title"}) stream. Preserves stream order; rejects
/// duplicate ids and malformed records with the offending line number.
std::vector<Document> ingest_documents(std::istream& in, CorpusFormat format);

/// Rule-based sentence splitter. A sentence ends at '.', '!' or '?' followed
/// by whitespace or end of text; a '.' directly after a single uppercase
/// letter (an initial such as "J.") does not terminate. Spans exclude the
/// whitespace between sentences; text without a terminator is one span.
std::vector<TextSpan> sentence_split(std::string_view text);

/// Greedy sentence packing: whole sentences are appended while the passage
/// stays within max_words; a single sentence longer than max_words is
/// hard-split at word boundaries into max_words-sized pieces. Concatenating
/// the passages' word sequences reproduces the document's word sequence.
std::vector<Passage> chunk_document(const Document& doc, int max_words = 120);

/// Lowercase + Unicode NFKC, punctuation replaced by spaces, whitespace runs
/// collapsed, trimmed. Idempotent.
std::string normalize_answer(std::string_view text);

/// normalize_answer followed by splitting on spaces.
std::vector<std::string> normalized_tokens(std::string_view text);

/// True iff the normalized token sequence of some answer occurs as a
/// contiguous subsequence of the passage text's normalized token sequence.
bool contains_answer(const Passage& passage, const std::vector<std::string>& answers);

/// Passage collection with id lookup. Construction rejects duplicate ids.
class PassageStore {
public:
    PassageStore() = default;
    static PassageStore build(std::vector<Passage> passages);

    const Passage* find(std::string_view id) const;
    /// Throws data_error naming the id when absent.
    const Passage& at(std::string_view id) const;

    std::size_t size() const { return passages_.size(); }
    bool empty() const { return passages_.empty(); }
    const std::vector<Passage>& passages() const { return passages_; }

private:
    std::vector<Passage> passages_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

// Passage store JSONL: written by `ingest`, read by every downstream stage.
void write_passages_jsonl(std::ostream& out, std::span<const Passage> passages);
std::vector<Passage> read_passages_jsonl(std::istream& in);

// QA JSONL: {"question", "answers": [...], "gold_passage_id"?}.
void write_qa_jsonl(std::ostream& out, std::span<const QAPair> pairs);
std::vector<QAPair> read_qa_jsonl(std::istream& in);

}  // namespace retro
