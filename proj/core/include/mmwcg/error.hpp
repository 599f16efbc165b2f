/*
 * Copyright 2026 The mmwcg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MMWCG_ERROR_HPP
#define MMWCG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mmwcg {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (coincident points, non-positive distance, beamwidth out of range).
class DomainError : public Error
{
public:
	using Error::Error;
};

/// Some base station carries more access links than there are sub-channels.
class InfeasibleScenario : public Error
{
public:
	using Error::Error;
};

class InfeasibleMove : public Error
{
public:
	using Error::Error;
};

class InvalidInitialPartition : public Error
{
public:
	using Error::Error;
};

/// The brute-force oracle would exceed its enumeration budget.
class InstanceTooLarge : public Error
{
public:
	using Error::Error;
};

class ConfigError : public Error
{
public:
	using Error::Error;
};

class EmptyInput : public Error
{
public:
	using Error::Error;
};

} // namespace mmwcg

#endif // MMWCG_ERROR_HPP
