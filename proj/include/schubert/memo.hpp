#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace schubert {

/// Read-mostly memo table. Values are computed outside the lock; a racing insert of the
/// same key keeps whichever value landed first (computations are deterministic, so
/// both are equal). References stay valid because entries are never erased.
template <class Key, class Value, class Compare = std::less<Key>>
class MemoCache {
public:
    template <class Fn>
    const Value& get(const Key& key, Fn&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, Value, Compare> table_;
};

} // namespace schubert
