// SPDX-License-Identifier: Apache-2.0
//
// elastic-sim: throughput scaling simulator for directional ad hoc networks
// Copyright (C) 2026 The elastic-sim authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace elastic
{
    // Positions coincide, or a direction is otherwise undefined.
    class degenerate_geometry : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A route needs a relay in a cell that holds no node.
    class routing_infeasible : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Invalid experiment or grid configuration (exit code 1 in the CLI).
    class config_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
