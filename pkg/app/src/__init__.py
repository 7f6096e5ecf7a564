# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""Core application package for the src namespace.

This package serves as the root for all gkcrystal modules and subpackages.
"""
import logging

logger = logging.getLogger('gkcrystal')
