// Copyright 2026 The qpke-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPKE_RUNTIME_HPP_
#define QPKE_RUNTIME_HPP_

#if defined(__GLIBC__)
#include <malloc.h>
#endif

namespace qpke {

// State vectors of 2^16 amplitudes are allocated and freed on every game
// trial. With glibc defaults each one is a fresh mmap, and page faults then
// dominate the run time. Keeping freed blocks in the heap avoids that.
// Optional; a no-op on other C libraries.
inline void keep_freed_memory() {
#if defined(__GLIBC__)
  mallopt(M_MMAP_THRESHOLD, 256 << 20);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
  mallopt(M_TOP_PAD, 64 << 20);
#endif
}

}  // namespace qpke

#endif  // QPKE_RUNTIME_HPP_
