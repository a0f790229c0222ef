#pragma once

// Shared plumbing: the library-wide error type, a deterministic parallel
// map, and an optional on-disk cache keyed by canonical strings.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace chordweave {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Applies fn to 0..count-1, possibly on several threads. Results are
// returned in index order, so the output is identical for any job count.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs,
                            const std::function<T(std::size_t)>& fn)
{
    std::vector<T> out(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = fn(i);
        return out;
    }
    unsigned nthreads = static_cast<unsigned>(
        std::min<std::size_t>(jobs, count));
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < count; i += nthreads)
                out[i] = fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
    return out;
}

inline std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Content-addressed string store under a directory. Each entry records its
// full key so hash collisions degrade to cache misses, never wrong values.
class FileCache {
public:
    explicit FileCache(std::filesystem::path dir) : dir_(std::move(dir))
    {
        std::filesystem::create_directories(dir_);
    }

    static std::optional<FileCache> from_env(const char* var = "CHORDWEAVE_CACHE")
    {
        const char* v = std::getenv(var);
        if (v == nullptr || *v == '\0')
            return std::nullopt;
        return FileCache(std::filesystem::path(v));
    }

    std::optional<std::string> get(const std::string& key) const
    {
        std::ifstream in(path_for(key), std::ios::binary);
        if (!in)
            return std::nullopt;
        std::string stored_key;
        if (!std::getline(in, stored_key) || stored_key != key)
            return std::nullopt;
        std::ostringstream value;
        value << in.rdbuf();
        return value.str();
    }

    void put(const std::string& key, const std::string& value) const
    {
        std::ofstream out(path_for(key), std::ios::binary | std::ios::trunc);
        if (!out)
            return;
        out << key << '\n' << value;
    }

private:
    std::filesystem::path path_for(const std::string& key) const
    {
        std::ostringstream name;
        name << std::hex << fnv1a(key) << "-" << key.size() << ".entry";
        return dir_ / name.str();
    }

    std::filesystem::path dir_;
};

} // namespace chordweave
