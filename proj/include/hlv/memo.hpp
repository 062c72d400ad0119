#pragma once

#include <functional>
#include <mutex>
#include <unordered_map>

namespace hlv {

/// Insert-only memo table safe for concurrent readers and writers. Values
/// are computed outside the lock; references stay valid because entries are
/// never erased and unordered_map nodes are stable.
template <class Key, class Value, class Hash = std::hash<Key>>
class Memo {
public:
    template <class Compute>
    const Value& get(const Key& key, Compute&& compute)
    {
        {
            std::lock_guard lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end())
                return it->second;
        }
        Value value = compute();
        std::lock_guard lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::mutex mutex_;
    std::unordered_map<Key, Value, Hash> table_;
};

} // namespace hlv
