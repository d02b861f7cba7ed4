#pragma once

// Search for complete-intersection threefolds in CP^{3+r} that share the Wall
// invariants (d, m, e, parity of k) but have different k, i.e. diffeomorphic
// threefolds with different Hodge numbers.
//
// Phase 1 keys every multidegree on the closed-form part (d, m, parity of k).
// Phase 2 runs the adjunction pipeline for the Euler number only inside phase-1
// buckets that hold at least two distinct k. Phase-1 records are either sorted
// in memory or, under a memory budget or spill directory, written as sorted
// text runs per leading-degree shard and combined by a k-way merge.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sasaki_hodge/complete_intersection.hpp"
#include "sasaki_hodge/errors.hpp"
#include "sasaki_hodge/integer.hpp"
#include "sasaki_hodge/reference_tables.hpp"

namespace sasaki {

struct SearchBounds {
  int r_max = 1;
  long max_degree = 2;
  std::optional<Integer> d_max;
  /// Phase-1 records held in memory per shard before a sorted run is spilled.
  std::optional<std::size_t> memory_budget;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> spill_dir;
  /// Reuse completed shards recorded in spill_dir's manifest.
  bool resume = false;

  void validate() const {
    if (r_max < 1) throw DomainError("r_max must be >= 1");
    if (max_degree < 2) throw DomainError("max_degree must be >= 2");
    if (memory_budget && *memory_budget == 0) throw DomainError("memory budget must be positive");
    if (resume && !spill_dir) throw DomainError("resume needs a spill directory");
  }

  bool spills() const { return memory_budget.has_value() || spill_dir.has_value(); }
};

namespace detail {

inline int compare_degrees(const DegreeTuple& a, const DegreeTuple& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

inline void enumerate_with_prefix(const SearchBounds& bounds, DegreeTuple& prefix,
                                  std::size_t length, const Integer& product,
                                  const std::function<void(const DegreeTuple&)>& visit) {
  if (prefix.size() == length) {
    visit(prefix);
    return;
  }
  const long upper = prefix.empty() ? bounds.max_degree : prefix.back();
  for (long v = 2; v <= upper; ++v) {
    Integer next = product * v;
    if (bounds.d_max && next > *bounds.d_max) break;
    prefix.push_back(v);
    enumerate_with_prefix(bounds, prefix, length, next, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Descending tuples d_1 >= ... >= d_r >= 2 with leading degree `lead`, in
/// order of length and then lexicographically.
inline void enumerate_shard(const SearchBounds& bounds, long lead,
                            const std::function<void(const DegreeTuple&)>& visit) {
  if (bounds.d_max && Integer(lead) > *bounds.d_max) return;
  for (int r = 1; r <= bounds.r_max; ++r) {
    DegreeTuple prefix{lead};
    detail::enumerate_with_prefix(bounds, prefix, static_cast<std::size_t>(r), Integer(lead),
                                  visit);
  }
}

/// Every canonical multidegree within bounds, exactly once, ordered by length
/// and then lexicographically.
inline void enumerate_multidegrees(const SearchBounds& bounds,
                                   const std::function<void(const DegreeTuple&)>& visit) {
  bounds.validate();
  for (int r = 1; r <= bounds.r_max; ++r) {
    DegreeTuple prefix;
    detail::enumerate_with_prefix(bounds, prefix, static_cast<std::size_t>(r), Integer(1), visit);
  }
}

inline std::vector<DegreeTuple> enumerate_multidegrees(const SearchBounds& bounds) {
  std::vector<DegreeTuple> out;
  enumerate_multidegrees(bounds, [&](const DegreeTuple& t) { out.push_back(t); });
  return out;
}

inline CompleteIntersectionSpec threefold_spec(const DegreeTuple& degrees) {
  return CompleteIntersectionSpec::in_projective_space(3 + static_cast<int>(degrees.size()),
                                                       std::span<const long>(degrees));
}

struct CollisionKey {
  Integer d;
  Integer m;
  Integer e;
  int k_parity = 0;
  bool operator==(const CollisionKey&) const = default;
};

struct CollisionMember {
  DegreeTuple degrees;
  WallInvariants wall;
  bool operator==(const CollisionMember&) const = default;
};

struct CollisionGroup {
  CollisionKey key;
  std::vector<CollisionMember> members;
  bool operator==(const CollisionGroup&) const = default;
};

struct SearchStats {
  std::size_t enumerated = 0;
  std::size_t phase1_buckets = 0;
  std::size_t phase2_evaluations = 0;
  std::size_t runs_written = 0;
  std::size_t shards_resumed = 0;
};

struct SearchResult {
  std::vector<CollisionGroup> groups;
  SearchStats stats;
};

/// Phase-1 record: the closed-form part of the Wall key plus the multidegree.
struct Phase1Record {
  Integer d;
  Integer m;
  int k_parity = 0;
  DegreeTuple degrees;

  static Phase1Record of(const DegreeTuple& degrees) {
    Phase1Record r;
    r.degrees = degrees;
    const std::vector<Integer> ds(degrees.begin(), degrees.end());
    r.d = wall_degree(ds);
    r.m = wall_m(ds);
    r.k_parity = is_odd(wall_k(ds)) ? 1 : 0;
    return r;
  }

  long k() const {
    long k = 4 + static_cast<long>(degrees.size());
    for (long v : degrees) k -= v;
    return k;
  }

  bool same_key(const Phase1Record& o) const {
    return d == o.d && m == o.m && k_parity == o.k_parity;
  }

  friend bool operator<(const Phase1Record& a, const Phase1Record& b) {
    if (int c = cmp(a.d, b.d)) return c < 0;
    if (int c = cmp(a.m, b.m)) return c < 0;
    if (a.k_parity != b.k_parity) return a.k_parity < b.k_parity;
    return detail::compare_degrees(a.degrees, b.degrees) < 0;
  }

  /// Fixed-field decimal line: d (30 digits), m (sign + 30 digits), parity, degrees.
  std::string to_line() const {
    std::ostringstream os;
    os << std::setw(30) << std::setfill('0') << d.get_str() << ' ' << (m < 0 ? '-' : '+')
       << std::setw(30) << std::setfill('0') << Integer(abs(m)).get_str() << ' ' << k_parity
       << ' ';
    for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
    return os.str();
  }

  static Phase1Record from_line(const std::string& line) {
    std::istringstream is(line);
    std::string d_text, m_text, degree_text;
    Phase1Record r;
    if (!(is >> d_text >> m_text >> r.k_parity >> degree_text)) {
      throw IntegrityError("malformed spill record: " + line);
    }
    r.d = parse_integer(d_text);
    r.m = parse_integer(m_text);
    std::istringstream ds(degree_text);
    std::string item;
    while (std::getline(ds, item, ',')) r.degrees.push_back(std::stol(item));
    return r;
  }
};

namespace detail {

class RecordSource {
 public:
  virtual ~RecordSource() = default;
  virtual bool next(Phase1Record& out) = 0;
};

class VectorSource : public RecordSource {
 public:
  explicit VectorSource(std::vector<Phase1Record> records) : records_(std::move(records)) {
    std::sort(records_.begin(), records_.end());
  }
  bool next(Phase1Record& out) override {
    if (pos_ == records_.size()) return false;
    out = std::move(records_[pos_++]);
    return true;
  }

 private:
  std::vector<Phase1Record> records_;
  std::size_t pos_ = 0;
};

/// Streaming k-way merge of sorted run files.
class MergeSource : public RecordSource {
 public:
  explicit MergeSource(const std::vector<std::filesystem::path>& runs) {
    for (const auto& path : runs) {
      auto in = std::make_unique<std::ifstream>(path);
      if (!*in) throw IntegrityError("cannot open spill run " + path.string());
      readers_.push_back(std::move(in));
      advance(readers_.size() - 1);
    }
  }

  bool next(Phase1Record& out) override {
    if (heap_.empty()) return false;
    auto top = heap_.top();
    heap_.pop();
    out = std::move(top.record);
    advance(top.reader);
    return true;
  }

 private:
  struct Entry {
    Phase1Record record;
    std::size_t reader;
    bool operator>(const Entry& o) const { return o.record < record; }
  };

  void advance(std::size_t reader) {
    std::string line;
    while (std::getline(*readers_[reader], line)) {
      if (line.empty()) continue;
      heap_.push(Entry{Phase1Record::from_line(line), reader});
      return;
    }
  }

  std::vector<std::unique_ptr<std::ifstream>> readers_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
};

inline std::string bounds_signature(const SearchBounds& b) {
  return "bounds " + std::to_string(b.r_max) + " " + std::to_string(b.max_degree) + " " +
         (b.d_max ? b.d_max->get_str() : std::string("-"));
}

inline std::filesystem::path run_path(const std::filesystem::path& dir, long lead,
                                      std::size_t index) {
  return dir / ("shard_" + std::to_string(lead) + "_run_" + std::to_string(index) + ".txt");
}

/// Spill directory bookkeeping: sorted run files per shard plus an append-only
/// manifest of completed shards, so an interrupted search can resume.
class SpillStore {
 public:
  SpillStore(const SearchBounds& bounds, std::filesystem::path dir, bool resume)
      : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
    const auto manifest = dir_ / "manifest.txt";
    const std::string signature = bounds_signature(bounds);
    if (resume && std::filesystem::exists(manifest)) {
      std::ifstream in(manifest);
      std::string line;
      std::getline(in, line);
      if (line != signature) {
        throw DomainError("spill manifest was written for different bounds: " + line);
      }
      while (std::getline(in, line)) {
        std::istringstream is(line);
        std::string tag;
        long lead = 0;
        std::size_t runs = 0;
        if (is >> tag >> lead >> runs && tag == "done") completed_[lead] = runs;
      }
    } else {
      for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
        const auto name = entry.path().filename().string();
        if (name.rfind("shard_", 0) == 0 || name == "manifest.txt") {
          std::filesystem::remove(entry.path());
        }
      }
      std::ofstream(manifest) << signature << '\n';
    }
  }

  bool completed(long lead) const { return completed_.count(lead) != 0; }
  std::size_t resumed() const { return completed_.size(); }

  std::filesystem::path write_run(long lead, std::size_t index,
                                  std::vector<Phase1Record>& records) {
    std::sort(records.begin(), records.end());
    const auto path = run_path(dir_, lead, index);
    std::ofstream out(path, std::ios::trunc);
    for (const auto& r : records) out << r.to_line() << '\n';
    out.flush();
    if (!out) throw IntegrityError("failed writing spill run " + path.string());
    records.clear();
    return path;
  }

  void mark_done(long lead, std::size_t runs) {
    std::lock_guard lock(mutex_);
    completed_[lead] = runs;
    std::ofstream(dir_ / "manifest.txt", std::ios::app)
        << "done " << lead << ' ' << runs << '\n';
  }

  std::vector<std::filesystem::path> all_runs() const {
    std::vector<std::filesystem::path> out;
    for (const auto& [lead, runs] : completed_) {
      for (std::size_t j = 0; j < runs; ++j) out.push_back(run_path(dir_, lead, j));
    }
    return out;
  }

 private:
  std::filesystem::path dir_;
  std::map<long, std::size_t> completed_;
  std::mutex mutex_;
};

/// Runs phase 2 on one phase-1 bucket and appends the resulting collision groups.
inline void resolve_bucket(std::vector<Phase1Record>& bucket, SearchResult& result) {
  ++result.stats.phase1_buckets;
  if (bucket.size() < 2) return;
  std::set<long> ks;
  for (const auto& r : bucket) ks.insert(r.k());
  if (ks.size() < 2) return;

  std::map<Integer, std::vector<CollisionMember>> by_euler;
  for (const auto& r : bucket) {
    auto wall = wall_invariants(threefold_spec(r.degrees));
    ++result.stats.phase2_evaluations;
    by_euler[wall.e].push_back(CollisionMember{r.degrees, wall});
  }
  for (auto& [e, members] : by_euler) {
    std::set<Integer> distinct;
    for (const auto& mbr : members) distinct.insert(mbr.wall.k);
    if (members.size() < 2 || distinct.size() < 2) continue;
    const auto& w = members.front().wall;
    CollisionGroup g{CollisionKey{w.d, w.m, w.e, w.k_parity}, std::move(members)};
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      for (std::size_t j = i + 1; j < g.members.size(); ++j) {
        const auto& a = g.members[i].wall;
        const auto& b = g.members[j].wall;
        if (a.k == b.k) continue;
        if (!are_diffeomorphic_wall(a, b) || hodge_equal(a, b) ||
            ci3_hodge(a, a.d) == ci3_hodge(b, b.d)) {
          throw IntegrityError("collision pair fails the Wall/Hodge certification");
        }
      }
    }
    result.groups.push_back(std::move(g));
  }
}

inline SearchResult group_sorted(RecordSource& source, SearchStats stats) {
  SearchResult result;
  result.stats = stats;
  std::vector<Phase1Record> bucket;
  Phase1Record rec;
  while (source.next(rec)) {
    if (!bucket.empty() && !bucket.front().same_key(rec)) {
      resolve_bucket(bucket, result);
      bucket.clear();
    }
    bucket.push_back(std::move(rec));
  }
  if (!bucket.empty()) resolve_bucket(bucket, result);
  return result;
}

}  // namespace detail

/// Two-phase search over an explicit candidate list (held in memory).
inline SearchResult search_collisions(std::span<const DegreeTuple> candidates) {
  std::vector<Phase1Record> records;
  for (const auto& t : candidates) {
    if (t.empty()) throw DomainError("empty multidegree in candidate list");
    DegreeTuple sorted = t;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted.back() < 2) throw DomainError("candidate degrees must be >= 2");
    records.push_back(Phase1Record::of(sorted));
  }
  SearchStats stats;
  stats.enumerated = records.size();
  detail::VectorSource source(std::move(records));
  return detail::group_sorted(source, stats);
}

/// Two-phase search over every multidegree within bounds.
inline SearchResult search_collisions(const SearchBounds& bounds) {
  bounds.validate();
  const unsigned jobs = std::max(1U, bounds.jobs);
  std::vector<long> leads;
  for (long v = 2; v <= bounds.max_degree; ++v) leads.push_back(v);

  SearchStats stats;
  std::atomic<std::size_t> enumerated{0};
  std::atomic<std::size_t> runs_written{0};
  std::atomic<std::size_t> next_shard{0};

  std::optional<std::filesystem::path> temp_dir;
  std::unique_ptr<detail::SpillStore> store;
  if (bounds.spills()) {
    auto dir = bounds.spill_dir;
    if (!dir) {
      std::random_device rd;
      temp_dir = std::filesystem::temp_directory_path() /
                 ("sasaki_hodge_spill_" + std::to_string(rd()));
      dir = temp_dir;
    }
    store = std::make_unique<detail::SpillStore>(bounds, *dir, bounds.resume);
    stats.shards_resumed = store->resumed();
  }

  std::vector<std::vector<Phase1Record>> in_memory(leads.size());
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      for (std::size_t s = next_shard++; s < leads.size(); s = next_shard++) {
        const long lead = leads[s];
        if (store && store->completed(lead)) continue;
        std::vector<Phase1Record> records;
        std::size_t runs = 0;
        enumerate_shard(bounds, lead, [&](const DegreeTuple& t) {
          records.push_back(Phase1Record::of(t));
          ++enumerated;
          if (store && records.size() >= bounds.memory_budget.value_or(SIZE_MAX)) {
            store->write_run(lead, runs++, records);
          }
        });
        if (store) {
          if (!records.empty()) store->write_run(lead, runs++, records);
          runs_written += runs;
          store->mark_done(lead, runs);
        } else {
          in_memory[s] = std::move(records);
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  stats.enumerated = enumerated;
  stats.runs_written = runs_written;
  SearchResult result;
  if (store) {
    detail::MergeSource source(store->all_runs());
    result = detail::group_sorted(source, stats);
  } else {
    std::vector<Phase1Record> all;
    for (auto& shard : in_memory) {
      for (auto& r : shard) all.push_back(std::move(r));
    }
    detail::VectorSource source(std::move(all));
    result = detail::group_sorted(source, stats);
  }
  store.reset();
  if (temp_dir) std::filesystem::remove_all(*temp_dir);
  return result;
}

struct VerificationResult {
  bool ok = true;
  std::vector<std::string> diffs;

  void expect(bool condition, const std::string& diff) {
    if (!condition) {
      ok = false;
      diffs.push_back(diff);
    }
  }
  void merge(const VerificationResult& other) {
    ok = ok && other.ok;
    diffs.insert(diffs.end(), other.diffs.begin(), other.diffs.end());
  }
};

inline std::string degrees_to_string(const DegreeTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

/// Recomputes (d, m, e, k) for every listed multidegree and checks the pairs.
inline VerificationResult verify_known_pairs(const Table2Fixture& fixture = reference_table2()) {
  VerificationResult v;
  std::vector<WallInvariants> walls;
  for (const auto& row : fixture.rows) {
    const auto w = wall_invariants(threefold_spec(row.degrees));
    const auto name = degrees_to_string(row.degrees);
    auto field = [&](const char* label, const Integer& got, const Integer& want) {
      v.expect(got == want, std::string("threefolds ") + name + " " + label + ": computed " +
                                to_string(got) + ", expected " + to_string(want));
    };
    field("d", w.d, row.d);
    field("p1", w.m, row.p1);
    field("euler", w.e, row.euler);
    field("c1", w.k, row.c1);
    walls.push_back(w);
  }
  for (std::size_t i = 0; i + 1 < walls.size(); i += 2) {
    const auto name = degrees_to_string(fixture.rows[i].degrees) + " ~ " +
                      degrees_to_string(fixture.rows[i + 1].degrees);
    const bool diffeo = are_diffeomorphic_wall(walls[i], walls[i + 1]);
    v.expect(diffeo, "threefolds pair " + name + " is not Wall-diffeomorphic");
    if (diffeo && walls[i].m < 0) {
      v.expect(!hodge_equal(walls[i], walls[i + 1]),
               "threefolds pair " + name + " has equal Hodge numbers");
    }
  }
  return v;
}

}  // namespace sasaki
