#ifndef ULIE_SRC_MEMO_HPP
#define ULIE_SRC_MEMO_HPP

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

namespace ulie::detail {

// Write-once memo table shared by all threads. Values are copied out, so
// callers never hold references into the table.
template <class K, class V>
class SharedMemo {
public:
    std::optional<V> find(const K& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    // Keeps the first value stored for a key; concurrent writers computed the same thing.
    void insert(const K& key, const V& value) {
        std::unique_lock lock(mutex_);
        table_.try_emplace(key, value);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<K, V> table_;
};

}  // namespace ulie::detail

#endif
