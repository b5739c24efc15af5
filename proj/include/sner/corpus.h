#ifndef SNER_CORPUS_H_
#define SNER_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sner/pipeline.h"

namespace sner {

using RecordId = uint64_t;

struct QueryFilter {
  std::optional<TagLabel> label;
  std::optional<std::string> surface;  // substring of the entity surface
  std::optional<RuleId> rule;
};

struct QueryHit {
  RecordId record;
  EntitySpan span;

  bool operator==(const QueryHit&) const = default;
};

// Append-only store of tagged documents, one JSON record per line:
//   {"id": 7, "text": "...", "entities": [...]}
// The (label, normalized surface) index is rebuilt from the file on open and
// kept current on every append. A single writer may append while other
// instances read; readers see the file as it was when they opened it.
class CorpusStore {
 public:
  // Opens the store at `path`, creating an empty file when absent.
  static CorpusStore Open(const std::filesystem::path& path);
  // Opens an existing store for querying. Throws MissingDataFile when the
  // file does not exist and CorruptStore naming the byte offset of the first
  // bad record.
  static CorpusStore OpenExisting(const std::filesystem::path& path);

  CorpusStore(CorpusStore&&) = default;
  CorpusStore& operator=(CorpusStore&&) = default;

  RecordId Append(const TaggedDocument& doc);

  // Hits matching every supplied filter field, ordered by (record, start).
  std::vector<QueryHit> Query(const QueryFilter& filter) const;

  size_t size() const { return records_.size(); }
  RecordId last_id() const { return records_.empty() ? 0 : records_.back().id; }
  const std::filesystem::path& path() const { return path_; }

 private:
  struct Record {
    RecordId id;
    uint64_t offset;
    std::vector<EntitySpan> entities;
  };
  struct Location {
    size_t record;
    size_t entity;
  };
  using IndexKey = std::pair<TagLabel, std::string>;

  CorpusStore() = default;
  void Load();
  void AddRecord(Record record);

  std::filesystem::path path_;
  std::vector<Record> records_;
  std::map<IndexKey, std::vector<Location>> index_;
  uint64_t end_offset_ = 0;
  std::ofstream out_;
};

}  // namespace sner

#endif  // SNER_CORPUS_H_
