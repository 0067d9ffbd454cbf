#include "ueq/index.hpp"

#include <algorithm>

namespace ueq {

namespace {

constexpr std::uint64_t kWildcard = ~0ull;

inline std::uint64_t key_of(Symbol f) {
  return (static_cast<std::uint64_t>(f.arity) << 32) | f.id;
}
inline std::uint32_t arity_of_key(std::uint64_t k) { return static_cast<std::uint32_t>(k >> 32); }

}  // namespace

void DiscriminationTree::flatten(const TermPtr& t, std::vector<FlatKey>& out) {
  if (t->is_var()) {
    out.push_back(kWildcard);
    return;
  }
  out.push_back(key_of(t->symbol()));
  for (const auto& a : t->args()) flatten(a, out);
}

void DiscriminationTree::insert(const TermPtr& key, IndexEntry entry) {
  std::vector<FlatKey> flat;
  flatten(key, flat);
  Node* node = &root_;
  for (FlatKey k : flat) {
    auto& kid = node->kids[k];
    if (!kid) kid = std::make_unique<Node>();
    node = kid.get();
  }
  node->entries.push_back(std::move(entry));
  ++size_;
}

bool DiscriminationTree::remove_rec(Node& node, const std::vector<FlatKey>& flat, std::size_t i,
                                    const IndexEntry& entry, bool& removed) {
  if (i == flat.size()) {
    auto it = std::find(node.entries.begin(), node.entries.end(), entry);
    if (it != node.entries.end()) {
      node.entries.erase(it);
      removed = true;
    }
  } else {
    auto it = node.kids.find(flat[i]);
    if (it != node.kids.end()) {
      if (remove_rec(*it->second, flat, i + 1, entry, removed)) node.kids.erase(it);
    }
  }
  return node.entries.empty() && node.kids.empty();
}

bool DiscriminationTree::remove(const TermPtr& key, const IndexEntry& entry) {
  std::vector<FlatKey> flat;
  flatten(key, flat);
  bool removed = false;
  remove_rec(root_, flat, 0, entry, removed);
  if (removed) --size_;
  return removed;
}

// Skips `count` complete terms stored in the trie below node, then resumes
// unifiable matching with the pending query frames.
void DiscriminationTree::skip_subtree(const Node& node, std::size_t count, const Frame* pending,
                                      std::vector<IndexEntry>& out) {
  if (count == 0) {
    unifiable_rec(node, pending, out);
    return;
  }
  for (const auto& [k, kid] : node.kids) {
    if (k == kWildcard)
      skip_subtree(*kid, count - 1, pending, out);
    else
      skip_subtree(*kid, count - 1 + arity_of_key(k), pending, out);
  }
}

void DiscriminationTree::unifiable_rec(const Node& node, const Frame* pending,
                                       std::vector<IndexEntry>& out) {
  if (!pending) {
    out.insert(out.end(), node.entries.begin(), node.entries.end());
    return;
  }
  const Term* t = pending->term;
  const Frame* rest = pending->rest;
  if (t->is_var()) {
    // a query variable unifies with any stored subterm
    skip_subtree(node, 1, rest, out);
    return;
  }
  if (auto it = node.kids.find(kWildcard); it != node.kids.end())
    unifiable_rec(*it->second, rest, out);
  if (auto it = node.kids.find(key_of(t->symbol())); it != node.kids.end()) {
    // push args in reverse so the first argument sits on top
    const Frame* frames = rest;
    std::vector<Frame> storage(t->args().size());
    for (std::size_t i = t->args().size(); i-- > 0;) {
      storage[i] = Frame{t->args()[i].get(), frames};
      frames = &storage[i];
    }
    unifiable_rec(*it->second, frames, out);
  }
}

void DiscriminationTree::retrieve_unifiable(const TermPtr& query,
                                            std::vector<IndexEntry>& out) const {
  Frame top{query.get(), nullptr};
  unifiable_rec(root_, &top, out);
}

void DiscriminationTree::generalizations_rec(const Node& node, const Frame* pending,
                                             std::vector<IndexEntry>& out) {
  if (!pending) {
    out.insert(out.end(), node.entries.begin(), node.entries.end());
    return;
  }
  const Term* t = pending->term;
  const Frame* rest = pending->rest;
  if (auto it = node.kids.find(kWildcard); it != node.kids.end())
    generalizations_rec(*it->second, rest, out);
  if (t->is_var()) return;  // a stored symbol never generalizes a query variable
  if (auto it = node.kids.find(key_of(t->symbol())); it != node.kids.end()) {
    const Frame* frames = rest;
    std::vector<Frame> storage(t->args().size());
    for (std::size_t i = t->args().size(); i-- > 0;) {
      storage[i] = Frame{t->args()[i].get(), frames};
      frames = &storage[i];
    }
    generalizations_rec(*it->second, frames, out);
  }
}

void DiscriminationTree::retrieve_generalizations(const TermPtr& query,
                                                  std::vector<IndexEntry>& out) const {
  Frame top{query.get(), nullptr};
  generalizations_rec(root_, &top, out);
}

void NaiveIndex::insert(const TermPtr& key, IndexEntry entry) {
  items_.emplace_back(key, std::move(entry));
}

bool NaiveIndex::remove(const TermPtr& key, const IndexEntry& entry) {
  for (auto it = items_.begin(); it != items_.end(); ++it) {
    if (it->second == entry && equal(it->first, key)) {
      items_.erase(it);
      return true;
    }
  }
  return false;
}

void NaiveIndex::retrieve_unifiable(const TermPtr& query, std::vector<IndexEntry>& out) const {
  for (const auto& [key, entry] : items_)
    if (unify(key, query)) out.push_back(entry);
}

void NaiveIndex::retrieve_generalizations(const TermPtr& query,
                                          std::vector<IndexEntry>& out) const {
  for (const auto& [key, entry] : items_)
    if (match(key, query)) out.push_back(entry);
}

}  // namespace ueq
