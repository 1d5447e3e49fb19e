#include "frobkit/dsl/gb_cache.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include "frobkit/dsl/evaluate.hpp"
#include "frobkit/dsl/parser.hpp"
#include "frobkit/error.hpp"
#include "json.hpp"

namespace frobkit::dsl {

namespace {

using nlohmann::json;

std::vector<std::string> canonical_generators(std::span<const Polynomial> generators) {
    std::vector<std::string> out;
    for (const auto& g : generators) out.push_back(to_string(g));
    std::sort(out.begin(), out.end());
    return out;
}

std::string sha256_hex(const std::string& text) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int size = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &size, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::InternalError, "SHA-256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < size; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

}  // namespace

DiskGbStore::DiskGbStore(const std::filesystem::path& workspace, std::ostream& warnings)
    : directory_(workspace / "gbcache"), warnings_(warnings) {
    std::error_code ec;
    std::filesystem::create_directories(directory_, ec);
    if (ec) throw Error(ErrorCode::InvalidArgument, "cannot create " + directory_.string() + ": " + ec.message());
}

std::string DiskGbStore::key(const RingPtr& ring, std::span<const Polynomial> generators, int version) {
    std::ostringstream text;
    text << "frobkit-gb\nversion=" << version << "\np=" << ring->field().characteristic() << "\nvars=";
    for (std::size_t i = 0; i < ring->arity(); ++i) text << (i ? "," : "") << ring->variables()[i];
    text << "\norder=" << ring->order().describe() << "\n";
    for (const auto& g : canonical_generators(generators)) text << g << "\n";
    return sha256_hex(text.str());
}

std::optional<std::vector<Polynomial>> DiskGbStore::load(const RingPtr& ring, std::span<const Polynomial> generators) {
    const auto path = entry_path(key(ring, generators));
    if (!std::filesystem::exists(path)) {
        ++misses_;
        return std::nullopt;
    }
    try {
        std::ifstream in(path);
        const json entry = json::parse(in);
        if (entry.at("version").get<int>() != format_version) throw std::runtime_error("unsupported version");
        if (entry.at("p").get<std::uint64_t>() != ring->field().characteristic() ||
            entry.at("vars").get<std::vector<std::string>>() != ring->variables() ||
            entry.at("order").get<std::string>() != ring->order().describe() ||
            entry.at("gens").get<std::vector<std::string>>() != canonical_generators(generators))
            throw std::runtime_error("entry does not match its key");
        std::vector<Polynomial> basis;
        for (const auto& text : entry.at("gb")) basis.push_back(evaluate(parse_polynomial(text.get<std::string>()), ring));
        ++hits_;
        return basis;
    } catch (const std::exception& e) {
        warnings_ << "warning: ignoring cache entry " << path.string() << ": " << e.what() << "\n";
        ++misses_;
        return std::nullopt;
    }
}

void DiskGbStore::save(const RingPtr& ring, std::span<const Polynomial> generators, const ReducedGB& gb) {
    static std::atomic<unsigned> counter{0};
    const auto path = entry_path(key(ring, generators));
    json entry{{"version", format_version},
               {"p", ring->field().characteristic()},
               {"vars", ring->variables()},
               {"order", ring->order().describe()},
               {"gens", canonical_generators(generators)},
               {"gb", json::array()},
               {"created_at", utc_now()}};
    for (const auto& g : gb.basis()) entry["gb"].push_back(to_string(g));

    auto temp = path;
    temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(temp);
        out << entry.dump() << "\n";
        if (!out) {
            warnings_ << "warning: cannot write cache entry " << temp.string() << "\n";
            std::filesystem::remove(temp);
            return;
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        warnings_ << "warning: cannot publish cache entry " << path.string() << ": " << ec.message() << "\n";
        std::filesystem::remove(temp, ec);
    }
}

}  // namespace frobkit::dsl
