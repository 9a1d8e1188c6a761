#include "bispec/exact/param.hpp"

#include "bispec/error.hpp"

#include <atomic>
#include <deque>
#include <mutex>

namespace bispec {

struct ParamTable::Impl {
  std::mutex write_mutex;
  std::deque<Param> entries;  // stable addresses
  std::atomic<std::size_t> published{0};
};

ParamTable::ParamTable() : impl_(new Impl) {}
ParamTable::~ParamTable() { delete impl_; }

ParamTable& ParamTable::global() {
  static ParamTable table;
  return table;
}

VarId ParamTable::intern(const Param& p) {
  if (p.name.empty() || p.name == kVariableX) {
    throw Error(ErrorKind::Domain, "invalid parameter name '" + p.name + "'");
  }
  std::lock_guard lock(impl_->write_mutex);
  const std::size_t n = impl_->published.load(std::memory_order_acquire);
  for (std::size_t i = 0; i < n; ++i) {
    const Param& e = impl_->entries[i];
    if (e.name != p.name) continue;
    if (e.relation != p.relation) {
      throw Error(ErrorKind::Domain, "parameter '" + p.name + "' already declared with a different relation");
    }
    return static_cast<VarId>(i);
  }
  impl_->entries.push_back(p);
  impl_->published.store(n + 1, std::memory_order_release);
  return static_cast<VarId>(n);
}

std::optional<VarId> ParamTable::find(std::string_view name) const {
  const std::size_t n = impl_->published.load(std::memory_order_acquire);
  for (std::size_t i = 0; i < n; ++i) {
    if (impl_->entries[i].name == name) return static_cast<VarId>(i);
  }
  return std::nullopt;
}

const Param& ParamTable::get(VarId id) const {
  if (id >= impl_->published.load(std::memory_order_acquire)) {
    throw Error(ErrorKind::Internal, "unknown parameter id");
  }
  return impl_->entries[id];
}

std::vector<std::string> ParamTable::names() const {
  const std::size_t n = impl_->published.load(std::memory_order_acquire);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(impl_->entries[i].name);
  return out;
}

VarId param(std::string_view name) {
  if (auto id = ParamTable::global().find(name)) return *id;
  return ParamTable::global().intern(Param{std::string(name), std::nullopt});
}

VarId algebraic(std::string_view name, const Rat& square) {
  return ParamTable::global().intern(Param{std::string(name), square});
}

}  // namespace bispec
