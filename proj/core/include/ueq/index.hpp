#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ueq/clause.hpp"
#include "ueq/term.hpp"

namespace ueq {

enum class Side : std::uint8_t { Left, Right };

inline Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// What an index leaf points at: a clause, which side of its equation, and the
/// position of the indexed subterm within that side.
struct IndexEntry {
  ClauseId clause = 0;
  Side side = Side::Left;
  Position pos;

  friend bool operator==(const IndexEntry& a, const IndexEntry& b) {
    return a.clause == b.clause && a.side == b.side && a.pos == b.pos;
  }
  friend bool operator<(const IndexEntry& a, const IndexEntry& b) {
    if (a.clause != b.clause) return a.clause < b.clause;
    if (a.side != b.side) return a.side < b.side;
    return a.pos < b.pos;
  }
};

/// Path-index trie over the preorder flattening of terms; every variable
/// collapses to one wildcard key. Retrievals are imperfect filters: they
/// return a superset of the exact answer set; callers post-filter with
/// unify/match.
class DiscriminationTree {
 public:
  void insert(const TermPtr& key, IndexEntry entry);
  bool remove(const TermPtr& key, const IndexEntry& entry);
  void retrieve_unifiable(const TermPtr& query, std::vector<IndexEntry>& out) const;
  void retrieve_generalizations(const TermPtr& query, std::vector<IndexEntry>& out) const;
  std::size_t size() const { return size_; }

 private:
  using FlatKey = std::uint64_t;
  struct Node {
    std::unordered_map<FlatKey, std::unique_ptr<Node>> kids;
    std::vector<IndexEntry> entries;
  };
  struct Frame {
    const Term* term;
    const Frame* rest;
  };

  static void flatten(const TermPtr& t, std::vector<FlatKey>& out);
  bool remove_rec(Node& node, const std::vector<FlatKey>& flat, std::size_t i,
                  const IndexEntry& entry, bool& removed);
  static void unifiable_rec(const Node& node, const Frame* pending, std::vector<IndexEntry>& out);
  static void skip_subtree(const Node& node, std::size_t count, const Frame* pending,
                           std::vector<IndexEntry>& out);
  static void generalizations_rec(const Node& node, const Frame* pending,
                                  std::vector<IndexEntry>& out);

  Node root_;
  std::size_t size_ = 0;
};

/// Linear-scan index with exact retrieval semantics; the testing oracle for
/// DiscriminationTree and a drop-in replacement at small scale.
class NaiveIndex {
 public:
  void insert(const TermPtr& key, IndexEntry entry);
  bool remove(const TermPtr& key, const IndexEntry& entry);
  void retrieve_unifiable(const TermPtr& query, std::vector<IndexEntry>& out) const;
  void retrieve_generalizations(const TermPtr& query, std::vector<IndexEntry>& out) const;
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<std::pair<TermPtr, IndexEntry>> items_;
};

}  // namespace ueq
