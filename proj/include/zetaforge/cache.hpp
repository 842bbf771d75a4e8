#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include "zetaforge/counting.hpp"

namespace zetaforge {

// Persistent count cache, one file per (variety hash, kind, base). Records
// are newline-delimited "n<TAB>value<TAB>meta" with decimal integers; serre
// entries carry their stabilization precision and window in the meta column
// and only match a lookup with the same window.
class CountCache {
public:
    explicit CountCache(std::string dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }

    struct Entry {
        Int value;
        CountSequence::Meta meta;
    };

    std::optional<Entry> lookup(const std::string& hash, CountKind kind, long p, long m,
                                long n, long window = -1);
    void store(const std::string& hash, CountKind kind, long p, long m, long n,
               const Int& value, const CountSequence::Meta& meta = {}, long window = -1);

private:
    struct FileState {
        // key: (n, window); window is -1 for weil/igusa records
        std::map<std::pair<long, long>, Entry> entries;
        bool loaded = false;
    };

    std::string file_path(const std::string& hash, CountKind kind, long p, long m) const;
    FileState& load(const std::string& path);
    void flush(const std::string& path, const FileState& st);

    std::string dir_;
    std::mutex mu_;
    std::map<std::string, FileState> files_;
};

} // namespace zetaforge
