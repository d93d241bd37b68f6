#ifndef MOPS_CACHE_HPP
#define MOPS_CACHE_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace mops {

// Process-wide memory budget shared by all memo caches. Each cache drops its
// contents when an insertion would push its share past the budget.
class CacheBudget {
 public:
  static std::size_t limitBytes();
  static void setLimitMB(std::size_t mb);
};

template <class Key, class Value, class Compare = std::less<Key>>
class MemoCache {
 public:
  using Ptr = std::shared_ptr<const Value>;

  Ptr find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second;
  }

  Ptr insert(const Key& key, Value value, std::size_t bytes) {
    auto ptr = std::make_shared<const Value>(std::move(value));
    std::unique_lock lock(mutex_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
    if (bytes_ + bytes > CacheBudget::limitBytes()) {
      map_.clear();
      bytes_ = 0;
    }
    bytes_ += bytes;
    map_.emplace(key, ptr);
    return ptr;
  }

  template <class F, class SizeF>
  Ptr getOrCompute(const Key& key, F&& compute, SizeF&& size) {
    if (auto hit = find(key)) return hit;
    Value v = compute();
    std::size_t bytes = size(v);
    return insert(key, std::move(v), bytes);
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
    bytes_ = 0;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Ptr, Compare> map_;
  std::size_t bytes_ = 0;
};

// Memo for small values that are handed out by reference; never evicts, so
// references stay valid for the life of the process.
template <class Key, class Value, class Compare = std::less<Key>>
class PersistentMemo {
 public:
  template <class F>
  const Value& getOrCompute(const Key& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mutex_);
    return map_.emplace(key, std::move(v)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value, Compare> map_;
};

}  // namespace mops

#endif
