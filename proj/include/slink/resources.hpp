/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

namespace slink {

/**
 * Execution resources shared by every parallel operation. The worker count
 * is a ceiling; 0 means "use the runtime default".
 */
struct resources {
  int n_threads = 0;

  [[nodiscard]] int threads() const;
};

/** Number of hardware threads reported by the parallel runtime. */
int default_thread_count();

}  // namespace slink
