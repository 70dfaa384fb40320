#include <atomic>
#include <sstream>
#include <thread>

#include "catkit/cli/app.hpp"
#include "catkit/error.hpp"

namespace catkit::cli {

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CaseBatch run_cases(std::size_t n, int workers, const std::function<Json(std::size_t)>& fn) {
  std::vector<std::optional<Json>> slots(n);
  std::vector<std::string> errors(n);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto work = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        slots[i] = fn(i);
      } catch (const std::exception& e) {
        errors[i] = std::string("case ") + std::to_string(i) + ": " + e.what();
        failed = true;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  CaseBatch batch;
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      batch.error = errors[i];
      break;
    }
    if (!slots[i]) {
      batch.error = "case " + std::to_string(i) + " was not run";
      break;
    }
    batch.results.push_back(std::move(*slots[i]));
  }
  return batch;
}

namespace {

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  return s;
}

}  // namespace

std::string Report::render(const RunConfig& cfg) const {
  std::ostringstream os;
  Json config;
  config["seed"] = cfg.seed;
  if (cfg.tol) {
    config["tol"] = *cfg.tol;
  } else {
    config["tol"] = nullptr;
  }
  config["workers"] = cfg.workers;
  config["format"] = cfg.format;
  Json header;
  header["type"] = "header";
  header["command"] = command;
  header["config"] = config;
  Json tail = summary;
  tail["ok"] = ok;

  if (cfg.format == "json") {
    os << header.dump() << '\n';
    for (const auto& c : cases) os << c.dump() << '\n';
    Json s;
    s["type"] = "summary";
    for (auto it = tail.begin(); it != tail.end(); ++it) s[it.key()] = it.value();
    os << s.dump() << '\n';
  } else if (cfg.format == "csv") {
    os << "# " << header.dump() << '\n';
    std::vector<std::string> keys;
    for (const auto& c : cases) {
      for (auto it = c.begin(); it != c.end(); ++it) {
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) keys.push_back(it.key());
      }
    }
    for (std::size_t k = 0; k < keys.size(); ++k) os << (k ? "," : "") << csv_cell(keys[k]);
    if (!keys.empty()) os << '\n';
    for (const auto& c : cases) {
      for (std::size_t k = 0; k < keys.size(); ++k) {
        if (k) os << ',';
        if (c.contains(keys[k])) os << csv_cell(c[keys[k]]);
      }
      os << '\n';
    }
    os << "# summary " << tail.dump() << '\n';
  } else if (cfg.format == "svg") {
    if (svg.empty()) throw Error("svg output is not available for " + command);
    os << svg;
  } else {
    throw Error("unknown format " + cfg.format);
  }
  return os.str();
}

}  // namespace catkit::cli
