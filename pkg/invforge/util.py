# Copyright (c) 2018-present Invforge Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import functools
import json
import os
import sys
import threading
from collections.abc import Hashable
from os.path import abspath, dirname, expanduser, isdir, isfile, join

from invforge import exception


class memoized(object):
    '''
    Decorator. Caches a function's return value each time it is called.
    If called later with the same arguments, the cached value is returned
    (not reevaluated). Insertion is serialized, readers are lock-free.
    '''

    def __init__(self, func):
        self.func = func
        self.cache = {}
        self._lock = threading.RLock()
        functools.update_wrapper(self, func)

    def __call__(self, *args):
        if not isinstance(args, Hashable):
            return self.func(*args)
        try:
            return self.cache[args]
        except KeyError:
            pass
        except TypeError:
            # unhashable member, a list for instance
            return self.func(*args)
        with self._lock:
            if args not in self.cache:
                self.cache[args] = self.func(*args)
            return self.cache[args]

    def __repr__(self):
        '''Return the function's docstring.'''
        return self.func.__doc__

    def __get__(self, obj, objtype):
        '''Support instance methods.'''
        fn = functools.partial(self.__call__, obj)
        fn.reset = self.reset
        return fn

    def reset(self):
        with self._lock:
            self.cache = {}


def load_json(file_path):
    try:
        with open(file_path, "r") as f:
            return json.load(f)
    except ValueError:
        raise exception.InvforgeException(
            "Could not load broken JSON: %s" % file_path)


def get_home_dir():
    home_dir = os.getenv("INVFORGE_HOME_DIR",
                         join(expanduser("~"), ".invforge"))
    if not isdir(home_dir):
        try:
            os.makedirs(home_dir)
        except OSError:
            raise exception.HomeDirPermissionsError(home_dir)
    assert isdir(home_dir)
    return home_dir


def get_source_dir():
    curpath = abspath(__file__)
    if not isfile(curpath):
        for p in sys.path:
            if isfile(join(p, __file__)):
                curpath = join(p, __file__)
                break
    return dirname(curpath)
