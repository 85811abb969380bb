#include "deltaq/kf_cache.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "deltaq/error.hpp"
#include "deltaq/json_io.hpp"
#include "deltaq/tableaux.hpp"

namespace deltaq {

std::string kf_cache_entry_line(const KFCacheEntry& entry) {
    nlohmann::ordered_json doc;
    doc["lam"] = nlohmann::ordered_json::parse(to_json(entry.lam));
    doc["mu"] = nlohmann::ordered_json::parse(to_json(entry.mu));
    doc["kf"] = nlohmann::ordered_json::parse(to_json(entry.kf));
    return doc.dump();
}

KFCacheEntry kf_cache_entry_parse(const std::string& line) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("lam") ||
        !doc.contains("mu") || !doc.contains("kf"))
        throw ParseError("cache line: expected {\"lam\":...,\"mu\":...,\"kf\":...}");
    KFCacheEntry entry;
    entry.lam = partition_from_json(doc["lam"].dump());
    entry.mu = partition_from_json(doc["mu"].dump());
    entry.kf = qlaurent_from_json(doc["kf"].dump());
    if (entry.lam.size() != entry.mu.size())
        throw ParseError("cache line: |lam| != |mu|");
    return entry;
}

KFCacheLoadStats kf_cache_load(const std::string& path, bool paranoid) {
    KFCacheLoadStats stats;
    if (!std::filesystem::exists(path)) return stats;
    std::ifstream in(path);
    if (!in) throw IoError("cannot read cache file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        KFCacheEntry entry;
        try {
            entry = kf_cache_entry_parse(line);
        } catch (const ParseError&) {
            ++stats.rejected;
            continue;
        }
        if (paranoid) {
            // Recompute from scratch and trust only matching entries.
            QLaurent fresh;
            for (const Tableau& t : enumerate_ssyt(entry.lam, entry.mu))
                fresh += QLaurent::monomial(charge(t.reading_word()));
            if (fresh != entry.kf) {
                ++stats.rejected;
                continue;
            }
        }
        kf_memo_insert(entry.lam, entry.mu, entry.kf);
        ++stats.loaded;
    }
    if (in.bad()) throw IoError("read error on cache file: " + path);
    return stats;
}

void kf_cache_store(const std::string& path) {
    std::filesystem::path target(path);
    std::filesystem::path dir = target.parent_path();
    if (dir.empty()) dir = ".";
    std::filesystem::path tmp = dir / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot write cache file: " + tmp.string());
        for (const auto& [lam, mu, kf] : kf_memo_snapshot())
            out << kf_cache_entry_line(KFCacheEntry{lam, mu, kf}) << "\n";
        out.flush();
        if (!out) throw IoError("write error on cache file: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path + ": " + ec.message());
}

} // namespace deltaq
