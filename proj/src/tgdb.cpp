#include "hgs/tgdb.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "hgs/errors.hpp"

namespace hgs {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<TransitiveGroupEntry> load_db(std::istream& source) {
  std::vector<TransitiveGroupEntry> out;
  std::set<std::pair<int, int>> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(source, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;

    const size_t bar = text.find('|');
    if (bar == std::string::npos)
      throw ParseError(lineno, int(text.size()), "missing '|' separator");

    std::istringstream head(text.substr(0, bar));
    TransitiveGroupEntry e;
    if (!(head >> e.degree >> e.index))
      throw ParseError(lineno, 1, "expected '<degree> <index>'");
    std::string hint;
    if (head >> hint) e.name_hint = hint;
    std::string extra;
    if (head >> extra)
      throw ParseError(lineno, int(bar), "unexpected token before '|'");
    if (e.degree < 2 || e.degree > kMaxDegree)
      throw ParseError(lineno, 1,
                       "degree out of range: " + std::to_string(e.degree));

    std::string perms = text.substr(bar + 1);
    std::istringstream body(perms);
    std::string tok;
    while (std::getline(body, tok, ';')) {
      tok = trim(tok);
      if (tok.empty()) continue;
      try {
        e.generators.push_back(Perm::parse_cycles(tok, e.degree));
      } catch (const std::exception& ex) {
        throw ParseError(lineno, int(bar + 1), ex.what());
      }
    }
    if (e.generators.empty())
      throw ParseError(lineno, int(bar + 1), "entry has no generators");

    if (!seen.insert({e.degree, e.index}).second)
      throw ValidationError(e.label(), "duplicate (degree, index)");
    e.group = PermGroup(e.degree, e.generators);
    if (!e.group.is_transitive())
      throw ValidationError(e.label(), "generators are not transitive");
    e.order = e.group.order();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<TransitiveGroupEntry> load_db_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open database file: " + path);
  return load_db(in);
}

const std::vector<TransitiveGroupEntry>& bundled_db() {
  static std::vector<TransitiveGroupEntry> db;
  static std::once_flag once;
  std::call_once(once, [] { db = load_db_file(HGS_BUNDLED_TGDB); });
  return db;
}

std::vector<TransitiveGroupEntry> resolve_db(const std::string& path_flag) {
  if (!path_flag.empty()) return load_db_file(path_flag);
  if (const char* env = std::getenv("HGS_TGDB"); env && *env)
    return load_db_file(env);
  return bundled_db();
}

std::vector<const TransitiveGroupEntry*> entries_of_degree(
    const std::vector<TransitiveGroupEntry>& db, int degree) {
  std::vector<const TransitiveGroupEntry*> out;
  for (const TransitiveGroupEntry& e : db)
    if (e.degree == degree) out.push_back(&e);
  std::sort(out.begin(), out.end(),
            [](const TransitiveGroupEntry* a, const TransitiveGroupEntry* b) {
              return a->index < b->index;
            });
  return out;
}

std::vector<uint64_t> min_conjugacy_key(const PermGroup& h) {
  const std::vector<Perm> sgens = PermGroup::symmetric(h.degree()).generators();
  std::vector<std::vector<uint64_t>> members{h.key()};
  std::set<std::vector<uint64_t>> seen{members[0]};
  std::vector<uint64_t> best = members[0];
  for (size_t qi = 0; qi < members.size(); ++qi) {
    const std::vector<uint64_t> cur = members[qi];
    for (const Perm& s : sgens) {
      std::vector<uint64_t> next;
      next.reserve(cur.size());
      for (uint64_t k : cur) {
        next.push_back(Perm::unpack(k, h.degree()).conjugated_by(s).key());
      }
      std::sort(next.begin(), next.end());
      if (seen.insert(next).second) {
        if (next < best) best = next;
        members.push_back(std::move(next));
      }
    }
  }
  return best;
}

std::vector<PermGroup> enumerate_transitive_oracle(int g) {
  if (g < 2 || g > 6)
    throw std::out_of_range("transitive oracle supports degrees 2..6");
  const PermGroup sg = PermGroup::symmetric(g);
  std::set<std::vector<uint64_t>> classes;
  for (const PermGroup& h : all_subgroups(sg)) {
    if (!h.is_transitive()) continue;
    classes.insert(min_conjugacy_key(h));
  }
  std::vector<PermGroup> out;
  for (const std::vector<uint64_t>& key : classes)
    out.push_back(group_from_keys(key.data(), int(key.size()), g));
  return out;
}

}  // namespace hgs
