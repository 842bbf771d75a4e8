#include "zetaforge/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace zetaforge {

std::string CountCache::file_path(const std::string& hash, CountKind kind, long p, long m) const {
    std::ostringstream name;
    name << hash << "." << count_kind_name(kind) << ".p" << p;
    if (kind == CountKind::Weil) name << "m" << m;
    name << ".counts";
    return (std::filesystem::path(dir_) / name.str()).string();
}

CountCache::FileState& CountCache::load(const std::string& path) {
    FileState& st = files_[path];
    if (st.loaded) return st;
    st.loaded = true;
    std::ifstream in(path);
    if (!in) return st;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t t1 = line.find('\t');
        std::size_t t2 = line.find('\t', t1 == std::string::npos ? t1 : t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            throw std::runtime_error("count cache: malformed record in " + path);
        long n = std::stol(line.substr(0, t1));
        Int value(line.substr(t1 + 1, t2 - t1 - 1));
        std::string meta = line.substr(t2 + 1);
        Entry e;
        e.value = value;
        long window = -1;
        if (meta != "-") {
            long mr = 0, w = 0;
            int smooth = 0;
            if (std::sscanf(meta.c_str(), "m=%ld;w=%ld;s=%d", &mr, &w, &smooth) < 2)
                throw std::runtime_error("count cache: malformed meta in " + path);
            e.meta.m_reached = mr;
            e.meta.window = w;
            e.meta.smooth = smooth != 0;
            window = w;
        }
        st.entries[{n, window}] = e;
    }
    return st;
}

void CountCache::flush(const std::string& path, const FileState& st) {
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("count cache: cannot write " + tmp);
        for (const auto& [key, e] : st.entries) {
            out << key.first << "\t" << e.value.get_str() << "\t";
            if (key.second < 0) {
                out << "-";
            } else {
                out << "m=" << e.meta.m_reached << ";w=" << e.meta.window
                    << ";s=" << (e.meta.smooth ? 1 : 0);
            }
            out << "\n";
        }
    }
    std::filesystem::rename(tmp, path);
}

std::optional<CountCache::Entry> CountCache::lookup(const std::string& hash, CountKind kind,
                                                    long p, long m, long n, long window) {
    if (!enabled()) return std::nullopt;
    if (kind != CountKind::Serre) window = -1;
    std::lock_guard<std::mutex> lk(mu_);
    FileState& st = load(file_path(hash, kind, p, m));
    auto it = st.entries.find({n, window});
    if (it == st.entries.end()) return std::nullopt;
    return it->second;
}

void CountCache::store(const std::string& hash, CountKind kind, long p, long m, long n,
                       const Int& value, const CountSequence::Meta& meta, long window) {
    if (!enabled()) return;
    if (kind != CountKind::Serre) window = -1;
    std::lock_guard<std::mutex> lk(mu_);
    std::string path = file_path(hash, kind, p, m);
    FileState& st = load(path);
    Entry e;
    e.value = value;
    e.meta = meta;
    st.entries[{n, window}] = e;
    flush(path, st);
}

} // namespace zetaforge
