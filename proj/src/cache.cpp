#include "descent/cache.hpp"

#include <unistd.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "descent/errors.hpp"

namespace descent {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kMagic = "descent-cache v";

std::vector<std::vector<std::uint32_t>> shape_payload(const CoxeterSystem& w) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& sh : w.shapes()) {
    std::vector<std::uint32_t> members;
    for (Subset m : sh.members) members.push_back(m.bits());
    out.push_back(std::move(members));
  }
  return out;
}

std::string body(const CacheEntry& e) {
  std::ostringstream out;
  out << kMagic << e.schema_version << '\n';
  out << "type " << e.type_label << '\n';
  out << "order " << e.group_order << '\n';
  out << "rank " << e.rank << '\n';
  out << "shapes " << e.shapes.size() << '\n';
  for (const auto& members : e.shapes) {
    out << members.size();
    for (auto m : members) out << ' ' << m;
    out << '\n';
  }
  out << "triples " << e.triples.size() << '\n';
  for (const auto& [I, J, K, c] : e.triples) out << I << ' ' << J << ' ' << K << ' ' << c << '\n';
  return out.str();
}

std::string hex(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

[[noreturn]] void corrupt(const std::string& what) { throw CorruptCache("corrupt cache entry: " + what); }

template <class T>
T read_field(std::istream& in, const std::string& key) {
  std::string k;
  T value{};
  if (!(in >> k) || k != key || !(in >> value)) corrupt("expected '" + key + "'");
  return value;
}

template <class T>
T read_value(std::istream& in) {
  T value{};
  if (!(in >> value)) corrupt("truncated data");
  return value;
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

CacheEntry make_entry(const DescentAlgebra& a) {
  CacheEntry e;
  e.type_label = a.system().label();
  e.group_order = a.system().order();
  e.rank = a.rank();
  e.triples = a.constants().triples();
  e.shapes = shape_payload(a.system());
  e.checksum = fnv1a(body(e));
  return e;
}

std::string serialize(const CacheEntry& e) {
  const std::string b = body(e);
  return b + "checksum " + hex(fnv1a(b)) + '\n';
}

std::optional<CacheEntry> deserialize(std::string_view text) {
  if (text.substr(0, kMagic.size()) != kMagic) corrupt("missing header");
  const std::size_t eol = text.find('\n');
  if (eol == std::string_view::npos) corrupt("truncated header");
  const std::string version(text.substr(kMagic.size(), eol - kMagic.size()));
  if (version != std::to_string(kCacheVersion)) return std::nullopt;

  const std::size_t mark = text.rfind("checksum ");
  if (mark == std::string_view::npos || (mark > 0 && text[mark - 1] != '\n')) corrupt("missing checksum");
  std::string stored(text.substr(mark + 9));
  while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
  const std::string_view payload = text.substr(0, mark);
  if (stored != hex(fnv1a(payload))) corrupt("checksum mismatch");

  std::istringstream in{std::string(payload.substr(eol + 1))};
  CacheEntry e;
  e.type_label = read_field<std::string>(in, "type");
  e.group_order = read_field<std::uint64_t>(in, "order");
  e.rank = read_field<int>(in, "rank");
  if (e.rank < 0 || e.rank > 8) corrupt("rank out of range");
  const auto shape_count = read_field<std::size_t>(in, "shapes");
  const std::size_t dim = subset_count(e.rank);
  if (shape_count > dim) corrupt("too many shapes");
  for (std::size_t k = 0; k < shape_count; ++k) {
    const auto n = read_value<std::size_t>(in);
    if (n > dim) corrupt("shape too large");
    std::vector<std::uint32_t> members(n);
    for (auto& m : members) m = read_value<std::uint32_t>(in);
    e.shapes.push_back(std::move(members));
  }
  const auto triple_count = read_field<std::size_t>(in, "triples");
  for (std::size_t k = 0; k < triple_count; ++k) {
    const auto I = read_value<std::uint32_t>(in), J = read_value<std::uint32_t>(in), K = read_value<std::uint32_t>(in);
    const auto c = read_value<std::uint64_t>(in);
    if (I >= dim || J >= dim || K >= dim) corrupt("subset out of range");
    e.triples.emplace_back(I, J, K, c);
  }
  std::string extra;
  if (in >> extra) corrupt("trailing data");
  e.checksum = fnv1a(payload);
  return e;
}

fs::path default_cache_dir() {
  if (const char* dir = std::getenv(kCacheDirEnv); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "descent";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "descent";
  return fs::temp_directory_path() / "descent-cache";
}

fs::path cache_file(const fs::path& dir, std::string_view type_label) {
  std::string name;
  for (char c : type_label) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return dir / (name + ".dcache");
}

void cache_store(const fs::path& dir, const CacheEntry& e) {
  fs::create_directories(dir);
  const fs::path target = cache_file(dir, e.type_label);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize(e);
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

std::optional<CacheEntry> cache_load(const fs::path& dir, std::string_view type_label) {
  const fs::path file = cache_file(dir, type_label);
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  return deserialize(text.str());
}

AlgebraPtr load_or_build(const SystemPtr& system, const CacheOptions& options, CacheOutcome* outcome) {
  auto report = [&](CacheOutcome o) {
    if (outcome) *outcome = o;
  };
  auto warn = [&](const std::string& msg) {
    if (options.warnings) *options.warnings << "warning: " << msg << '\n';
  };
  if (!options.enabled) {
    report(CacheOutcome::Disabled);
    return DescentAlgebra::create(system);
  }
  CacheOutcome result = CacheOutcome::Miss;
  try {
    if (auto e = cache_load(options.dir, system->label())) {
      if (e->type_label != system->label() || e->group_order != system->order() || e->rank != system->rank() ||
          e->shapes != shape_payload(*system))
        corrupt("entry does not match " + system->label());
      auto constants = StructureConstants::from_triples(e->rank, e->triples);
      report(CacheOutcome::Hit);
      return DescentAlgebra::create(system, std::move(constants));
    }
  } catch (const CorruptCache& err) {
    warn(std::string(err.what()) + "; recomputing " + system->label());
    result = CacheOutcome::Recomputed;
  }
  AlgebraPtr a = DescentAlgebra::create(system);
  try {
    cache_store(options.dir, make_entry(*a));
  } catch (const std::exception& err) {
    warn(std::string("could not store cache entry: ") + err.what());
  }
  report(result);
  return a;
}

}  // namespace descent
