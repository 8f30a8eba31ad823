#pragma once

#include <cassert>
#include <coroutine>
#include <exception>
#include <utility>

#include "wedge/world.hpp"

namespace wedge {

class Agent;

// Coroutine task for agent procedures. A procedure suspends whenever it emits
// a move through the Agent and is resumed with the next observation already in
// place. Awaiting a child procedure transfers control into it; its completion
// transfers back (symmetric transfer, so arbitrarily deep procedure nesting
// costs no stack).
struct [[nodiscard]] Proc {
  struct promise_type;
  using Handle = std::coroutine_handle<promise_type>;

  struct FinalAwaiter {
    bool await_ready() const noexcept { return false; }
    std::coroutine_handle<> await_suspend(Handle h) noexcept {
      if (auto cont = h.promise().continuation) return cont;
      return std::noop_coroutine();
    }
    void await_resume() const noexcept {}
  };

  struct promise_type {
    std::coroutine_handle<> continuation;
    std::exception_ptr error;

    Proc get_return_object() { return Proc{Handle::from_promise(*this)}; }
    std::suspend_always initial_suspend() noexcept { return {}; }
    FinalAwaiter final_suspend() noexcept { return {}; }
    void return_void() {}
    void unhandled_exception() { error = std::current_exception(); }
  };

  explicit Proc(Handle h) : h_(h) {}
  Proc(Proc&& o) noexcept : h_(std::exchange(o.h_, {})) {}
  Proc& operator=(Proc&& o) noexcept {
    if (this != &o) {
      if (h_) h_.destroy();
      h_ = std::exchange(o.h_, {});
    }
    return *this;
  }
  Proc(const Proc&) = delete;
  Proc& operator=(const Proc&) = delete;
  ~Proc() {
    if (h_) h_.destroy();
  }

  auto operator co_await() noexcept {
    struct Awaiter {
      Handle child;
      bool await_ready() const noexcept { return false; }
      std::coroutine_handle<> await_suspend(std::coroutine_handle<> parent) noexcept {
        child.promise().continuation = parent;
        return child;
      }
      void await_resume() const {
        if (child.promise().error) std::rethrow_exception(child.promise().error);
      }
    };
    return Awaiter{h_};
  }

  Handle handle() const { return h_; }

 private:
  Handle h_;
};

// The channel between the run loop and the procedure coroutines: procedures
// read the current observation synchronously and emit one output per step.
class Agent {
 public:
  const Observation& obs() const { return obs_; }
  bool free(Port p) const { return obs_.free.contains(p); }
  bool full() const { return obs_.full; }
  int carried() const { return obs_.carried; }

  struct MoveAwaiter {
    Agent& a;
    AgentOutput out;
    bool await_ready() const noexcept { return false; }
    void await_suspend(std::coroutine_handle<> h) noexcept {
      a.pending_ = out;
      a.leaf_ = h;
    }
    void await_resume() const noexcept {}
  };

  // Step through a port, leaving the node as observed (no pebble action).
  MoveAwaiter move(Port p) { return {*this, {p, obs_.full, obs_.carried}}; }
  // Step through a port, dropping one carried pebble on the (empty) node.
  MoveAwaiter drop(Port p) { return {*this, {p, true, obs_.carried - 1}}; }
  // Step through a port, picking the pebble up from the (full) node.
  MoveAwaiter pick(Port p) { return {*this, {p, false, obs_.carried + 1}}; }

  struct [[nodiscard]] LabelGuard {
    Agent& a;
    const char* prev;
    LabelGuard(Agent& ag, const char* l) : a(ag), prev(ag.label_) { ag.label_ = l; }
    ~LabelGuard() { a.label_ = prev; }
    LabelGuard(const LabelGuard&) = delete;
    LabelGuard& operator=(const LabelGuard&) = delete;
  };
  // Procedures call this on entry; the label reverts when the scope unwinds.
  LabelGuard label(const char* l) { return LabelGuard{*this, l}; }
  const char* current_label() const { return label_; }

 private:
  friend class CoroController;
  Observation obs_;
  std::optional<AgentOutput> pending_;
  std::coroutine_handle<> leaf_;
  const char* label_ = "start";
};

class CoroController : public Controller {
 public:
  template <class F>
  CoroController(int pebbles, F&& make_root) : p_(pebbles), root_(make_root(agent_)) {}
  CoroController(const CoroController&) = delete;
  CoroController& operator=(const CoroController&) = delete;

  std::optional<AgentOutput> next(const Observation& obs) override {
    if (done_) return std::nullopt;
    agent_.obs_ = obs;
    agent_.pending_.reset();
    std::coroutine_handle<> h;
    if (started_) {
      h = agent_.leaf_;
    } else {
      started_ = true;
      h = root_.handle();
    }
    h.resume();
    if (root_.handle().done()) {
      done_ = true;
      if (auto e = root_.handle().promise().error) std::rethrow_exception(e);
      return std::nullopt;
    }
    assert(agent_.pending_.has_value());
    return agent_.pending_;
  }

  std::string_view proc() const override { return agent_.current_label(); }
  int pebbles() const override { return p_; }

 private:
  int p_;
  Agent agent_;
  Proc root_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace wedge
