// SPDX-License-Identifier: Apache-2.0
//
// wptsim - near-field RF wireless power transfer simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef WPTSIM_ERRORS_HPP
#define WPTSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wptsim
{

// Error categories map onto the CLI exit codes:
//   std::invalid_argument / config_error -> 2, io_error -> 3, singularity_error -> 4.

// Bad or inconsistent configuration input.
class config_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// File system or serialization failure.
class io_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Numerical singularity, e.g. a receive position coinciding with a transmit antenna.
class singularity_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace wptsim

#endif
