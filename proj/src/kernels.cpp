#include "convexlab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace convexlab::kern {

namespace {

Backend detect_backend() {
  if (const char* env = std::getenv("CONVEXLAB_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Backend::avx2;
    // unknown or unsupported value: fall through to autodetection
  }
  return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect_backend()};
  return b;
}

}  // namespace

const BitOps& ops() {
  return current().load(std::memory_order_relaxed) == Backend::avx2 ? avx2_ops() : scalar_ops();
}

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported()) b = Backend::scalar;
  current().store(b, std::memory_order_relaxed);
}

std::string_view backend_name() {
  return current().load(std::memory_order_relaxed) == Backend::avx2 ? "avx2" : "scalar";
}

}  // namespace convexlab::kern
