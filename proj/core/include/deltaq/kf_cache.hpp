#ifndef DELTAQ_KF_CACHE_HPP
#define DELTAQ_KF_CACHE_HPP

#include <string>

#include "deltaq/partition.hpp"
#include "deltaq/qlaurent.hpp"

namespace deltaq {

// One persisted Kostka-Foulkes value.  Serialized as a JSON line
// {"lam":[...],"mu":[...],"kf":[[e,"num/den"],...]}.
struct KFCacheEntry {
    Partition lam;
    Partition mu;
    QLaurent kf;
};

struct KFCacheLoadStats {
    long loaded = 0;     // entries merged into the in-process memo
    long rejected = 0;   // corrupt or (under paranoid) stale lines skipped
};

// Merges entries from a JSON-lines file into the process-wide memo.  A
// missing file is an empty cache; unreadable files raise IoError naming the
// path.  Corrupt lines are skipped and counted.  With `paranoid` set every
// entry is recomputed and mismatches are rejected (counted) instead of
// merged.
KFCacheLoadStats kf_cache_load(const std::string& path, bool paranoid = false);

// Writes the full in-process memo as JSON lines, atomically (temp file in
// the same directory, then rename).  IoError names the path on failure.
void kf_cache_store(const std::string& path);

std::string kf_cache_entry_line(const KFCacheEntry& entry);
KFCacheEntry kf_cache_entry_parse(const std::string& line);   // ParseError

} // namespace deltaq

#endif
