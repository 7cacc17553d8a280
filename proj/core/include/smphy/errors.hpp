// SPDX-License-Identifier: Apache-2.0
//
// smphy - link-level simulator for spatial modulation with compact
// reconfigurable antennas and massive MIMO base stations
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

#ifndef SMPHY_ERRORS_HPP
#define SMPHY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace smphy {

// Base class for everything thrown by the library, so callers can catch
// smphy failures separately from generic std exceptions.
class error : public std::runtime_error {
  public:
    explicit error(const std::string &msg) : std::runtime_error(msg) {}
};

// A numeric or structural argument is out of its documented domain
// (port counts < 1, empty scatterer sets, non-positive SNR steps, ...).
class invalid_parameter_error : public error {
  public:
    using error::error;
};

// Two radiation patterns (or an antenna and a pattern) do not share the
// same angular grid, so sample-wise integrals are undefined.
class grid_mismatch_error : public error {
  public:
    using error::error;
};

// A radiation pattern carries no energy; correlations against it are 0/0.
class degenerate_pattern_error : public error {
  public:
    using error::error;
};

// A requested correlation target cannot be realized (wrong shape,
// asymmetry, values outside [0, 1], unit diagonal violated).
class invalid_target_error : public error {
  public:
    using error::error;
};

// An on-disk artifact (antenna file, config) could not be parsed.  The
// message names the offending line.
class format_error : public error {
  public:
    using error::error;
};

// A bit word does not fit the scheme it is being modulated with.
class invalid_word_error : public error {
  public:
    using error::error;
};

// A drawn channel cannot support the requested processing (zero energy,
// or a port column/row with zero power so MRC/MRT weights blow up).
class degenerate_channel_error : public error {
  public:
    using error::error;
};

} // namespace smphy

#endif // SMPHY_ERRORS_HPP
