// Copyright 2026 The eegapprox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eegapprox/worker_pool.hpp"

#include <exception>
#include <utility>

#include "eegapprox/errors.hpp"

namespace eegapprox {

WorkerPool::WorkerPool(std::size_t size) {
  if (size == 0) throw DomainError("worker pool needs at least one worker");
  threads_.reserve(size - 1);
  for (std::size_t i = 1; i < size; ++i) {
    threads_.emplace_back([this](std::stop_token st) { worker_loop(st); });
  }
}

WorkerPool::~WorkerPool() {
  for (auto& t : threads_) t.request_stop();
  wake_.notify_all();
}

void WorkerPool::drain() {
  std::unique_lock lock(mutex_);
  while (next_index_ < job_count_) {
    const std::size_t i = next_index_++;
    const auto* job = job_;
    lock.unlock();
    try {
      (*job)(i);
    } catch (...) {
      lock.lock();
      if (!error_) error_ = std::current_exception();
      lock.unlock();
    }
    lock.lock();
    if (++finished_ == job_count_) done_.notify_all();
  }
}

void WorkerPool::worker_loop(std::stop_token stop) {
  std::size_t seen = 0;
  while (true) {
    {
      std::unique_lock lock(mutex_);
      if (!wake_.wait(lock, stop, [&] {
            return generation_ != seen && next_index_ < job_count_;
          })) {
        return;
      }
      seen = generation_;
    }
    drain();
  }
}

void WorkerPool::parallel_for(std::size_t count,
                              const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  {
    std::lock_guard lock(mutex_);
    job_ = &fn;
    job_count_ = count;
    next_index_ = 0;
    finished_ = 0;
    error_ = nullptr;
    ++generation_;
  }
  wake_.notify_all();
  drain();

  std::unique_lock lock(mutex_);
  done_.wait(lock, [&] { return finished_ == job_count_; });
  job_ = nullptr;
  job_count_ = 0;
  next_index_ = 0;
  if (auto err = std::exchange(error_, nullptr)) std::rethrow_exception(err);
}

}  // namespace eegapprox
