#include "sner/corpus.h"

#include <algorithm>
#include <cerrno>
#include <cstring>

#include <json.hpp>

#include "sner/error.h"
#include "sner/render.h"

namespace sner {

namespace {

[[noreturn]] void ThrowIo(const std::string& what,
                          const std::filesystem::path& path) {
  throw Error(ErrorCode::kIOFailure,
              what + " " + path.string() + ": " + std::strerror(errno));
}

}  // namespace

CorpusStore CorpusStore::Open(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    std::ofstream create(path, std::ios::binary | std::ios::app);
    if (!create) ThrowIo("cannot create store", path);
  }
  return OpenExisting(path);
}

CorpusStore CorpusStore::OpenExisting(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error(ErrorCode::kMissingDataFile,
                "store not found: " + path.string());
  }
  CorpusStore store;
  store.path_ = path;
  store.Load();
  return store;
}

void CorpusStore::Load() {
  std::ifstream in(path_, std::ios::binary);
  if (!in) ThrowIo("cannot read store", path_);
  std::string line;
  uint64_t offset = 0;
  while (std::getline(in, line)) {
    const uint64_t line_offset = offset;
    offset += line.size() + (in.eof() ? 0 : 1);
    auto corrupt = [&](const std::string& why) {
      throw Error(ErrorCode::kCorruptStore,
                  path_.string() + ": bad record at byte " +
                      std::to_string(line_offset) + ": " + why);
    };
    if (line.empty()) corrupt("empty line");
    Record record;
    record.offset = line_offset;
    try {
      auto j = nlohmann::json::parse(line);
      record.id = j.at("id").get<RecordId>();
      j.at("text").get<std::string>();
      for (const auto& e : j.at("entities")) {
        record.entities.push_back(EntityFromJson(e));
      }
    } catch (const std::exception& e) {
      corrupt(e.what());
    }
    if (record.id <= last_id()) corrupt("record id is not increasing");
    AddRecord(std::move(record));
  }
  end_offset_ = offset;
}

void CorpusStore::AddRecord(Record record) {
  const size_t index = records_.size();
  for (size_t e = 0; e < record.entities.size(); ++e) {
    const EntitySpan& span = record.entities[e];
    index_[{span.label, FoldCase(span.surface)}].push_back({index, e});
  }
  records_.push_back(std::move(record));
}

RecordId CorpusStore::Append(const TaggedDocument& doc) {
  if (!out_.is_open()) {
    out_.open(path_, std::ios::binary | std::ios::app);
    if (!out_) ThrowIo("cannot open store for writing", path_);
  }
  Record record;
  record.id = last_id() + 1;
  record.offset = end_offset_;
  record.entities = doc.entities;

  nlohmann::ordered_json j;
  j["id"] = record.id;
  const nlohmann::ordered_json body = DocumentToJson(doc);
  for (auto& [key, value] : body.items()) j[key] = value;
  std::string line =
      j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
  line += '\n';

  errno = 0;
  out_.write(line.data(), static_cast<std::streamsize>(line.size()));
  out_.flush();
  if (!out_) ThrowIo("write failed for", path_);
  end_offset_ += line.size();
  const RecordId id = record.id;
  AddRecord(std::move(record));
  return id;
}

std::vector<QueryHit> CorpusStore::Query(const QueryFilter& filter) const {
  const std::string needle = filter.surface ? FoldCase(*filter.surface) : "";
  std::vector<Location> found;

  auto scan = [&](auto begin, auto end) {
    for (auto it = begin; it != end; ++it) {
      if (it->first.second.find(needle) == std::string::npos) continue;
      for (const Location& loc : it->second) {
        const EntitySpan& span = records_[loc.record].entities[loc.entity];
        if (filter.rule && span.rule != *filter.rule) continue;
        found.push_back(loc);
      }
    }
  };
  if (filter.label) {
    auto first = index_.lower_bound({*filter.label, std::string()});
    auto last = first;
    while (last != index_.end() && last->first.first == *filter.label) ++last;
    scan(first, last);
  } else {
    scan(index_.begin(), index_.end());
  }

  std::sort(found.begin(), found.end(), [this](const Location& a,
                                               const Location& b) {
    if (a.record != b.record) return a.record < b.record;
    const EntitySpan& sa = records_[a.record].entities[a.entity];
    const EntitySpan& sb = records_[b.record].entities[b.entity];
    return sa.begin_token < sb.begin_token;
  });
  std::vector<QueryHit> hits;
  hits.reserve(found.size());
  for (const Location& loc : found) {
    hits.push_back({records_[loc.record].id,
                    records_[loc.record].entities[loc.entity]});
  }
  return hits;
}

}  // namespace sner
