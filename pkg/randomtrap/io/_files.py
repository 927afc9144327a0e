"""
File input and output.

This module contains classes implementing file input and output, the JSON
writers and the naming of output files.

Data and image files carry no dates, host names or timings, so identical
runs write identical bytes. Only event files are time stamped.

"""

import codecs
import json
import os
from platform import uname

from . import defaults
from .. import _internals


def output_name(command, region, n, p, q, seed, ext):
    """Return the file name <command>_<region><n>_p<p>_q<q>_s<seed>.<ext>.

    Parameters
    ----------
    command : str
    region : str
        region kind
    n : int
    p, q : float
    seed : int
    ext : str
        extension without dot

    """

    return "{0}_{1}{2}_p{3:g}_q{4:g}_s{5}.{6}".format(
        command, region, n, p, q, seed, ext)


def _make_directory(directory):
    if directory and not os.path.isdir(directory):
        os.makedirs(directory)


class InputFile(object):
    """A class implementing an input file."""

    def __init__(self, filename, encoding="utf-8"):
        """Create an input file.

        All lines in the specified text file will be read into a list of
        strings.

        Parameters
        ----------
        filename : str
            name of the input file
        encoding : str, optional
            the encoding used to read the content of the file

        """

        self._filename = filename
        if not os.path.isfile(filename):
            raise IOError("The input file '{0}' does not exist.".format(
                filename))
        with codecs.open(filename, "rb", encoding, errors="replace") as f:
            self._lines = [line.rstrip("\r\n") for line in f]

    @property
    def filename(self):
        """Getter for filename."""
        return self._filename

    @property
    def n_lines(self):
        """Getter for n_lines."""
        return len(self._lines)

    @property
    def lines(self):
        """Getter for lines."""
        return self._lines


class OutputFile(_internals.Randomtrap_object):
    """A class implementing an output file.

    Content is buffered and appended to the file on save.

    """

    def __init__(self, filename, directory, comment_char=None):
        """Create an output file.

        Parameters
        ----------
        filename : str
            name of the file
        directory : str
            create file in given directory
        comment_char : str, optional
            comment character

        """

        _internals.Randomtrap_object.__init__(self)
        if comment_char is not None:
            self._comment_char = comment_char
        else:
            self._comment_char = defaults.outputfile_comment_char
        self._directory = directory
        self._filename = filename
        self._fullpath = os.path.join(directory, filename)
        self._buffer = []
        _make_directory(directory)
        with open(self._fullpath, "w"):
            pass

    @property
    def fullpath(self):
        """Getter for fullpath."""
        return self._fullpath

    @property
    def filename(self):
        """Getter for filename."""
        return self._filename

    @property
    def directory(self):
        """Getter for directory."""
        return self._directory

    @property
    def comment_char(self):
        """Getter for comment_char."""
        return self._comment_char

    def save(self):
        """Save file to disk."""

        if self._buffer:
            with open(self._fullpath, "ab") as f:
                f.write("".join(self._buffer).encode("utf-8"))
            self._buffer = []
            self._log("File,saved,{0}".format(self._filename), 2)

    def write(self, content):
        """Write to file.

        Parameters
        ----------
        content : str
            content to be written (anything, will be casted to str)

        """

        if not isinstance(content, str):
            content = str(content)
        self._buffer.append(content)

    def write_line(self, content):
        """Write a text line to files."""

        self.write(content)
        self.write(defaults.outputfile_eol)

    def write_comment(self, comment):
        """Write a comment line to files.

        (i.e., text is proceeded by comment char).

        """

        self.write(self._comment_char)
        self.write_line(comment)


def _csv_field(value, delimiter):
    if value is None:
        value = ""
    elif isinstance(value, float):
        value = repr(value)
    elif not isinstance(value, str):
        value = str(value)
    if '"' in value:
        value = value.replace('"', '""')
    if delimiter in value or '"' in value:
        value = '"{0}"'.format(value)
    return value


class DataFile(OutputFile):
    """A class implementing a data file.

    A data file starts with comment lines holding the run configuration,
    followed by the line of variable names and one line per record.

    """

    def __init__(self, filename, variable_names, directory=None,
                 delimiter=None, config=None):
        """Create a data file.

        Parameters
        ----------
        filename : str
            name of the file
        variable_names : list of str
            column names, in order
        directory : str, optional
            directory of the file
        delimiter : str, optional
            symbol between variables
        config : dict, optional
            run configuration for the header, written in sorted key order

        """

        if directory is None:
            directory = defaults.datafile_directory
        OutputFile.__init__(self, filename, directory)
        if delimiter is not None:
            self._delimiter = delimiter
        else:
            self._delimiter = defaults.datafile_delimiter
        self._variable_names = list(variable_names)
        self.write_comment("Randomtrap {0}, data file".format(
            _internals.__version__))
        if config:
            for key in sorted(config):
                self.write_comment("{0} = {1}".format(key, config[key]))
        self.write_line(self._delimiter.join(self._variable_names))
        self._n_rows = 0

    @property
    def delimiter(self):
        """Getter for delimiter."""
        return self._delimiter

    @property
    def variable_names(self):
        """Getter for variable_names."""
        return list(self._variable_names)

    @property
    def n_rows(self):
        """Getter for n_rows."""
        return self._n_rows

    def add(self, data):
        """Add a record.

        Parameters
        ----------
        data : dict or list
            a dict keyed by the variable names (missing keys are written
            empty) or the values in column order

        """

        if isinstance(data, dict):
            unknown = set(data) - set(self._variable_names)
            if unknown:
                raise ValueError("Unknown variables {0}!".format(
                    sorted(unknown)))
            data = [data.get(name) for name in self._variable_names]
        elif len(data) != len(self._variable_names):
            raise ValueError("Expected {0} values, not {1}!".format(
                len(self._variable_names), len(data)))
        self.write_line(self._delimiter.join(
            _csv_field(v, self._delimiter) for v in data))
        self._n_rows += 1

    def save(self):
        """Save the new data to the data file."""

        OutputFile.save(self)
        self._log("Data,saved,{0}".format(self._filename), 1)


class EventFile(OutputFile):
    """A class implementing an event file."""

    def __init__(self, filename, directory=None, delimiter=None, clock=None):
        """Create an event file.

        Parameters
        ----------
        filename : str
            name of the file
        directory : str, optional
            directory of the file
        delimiter : str, optional
            symbol between timestamp and event
        clock : randomtrap.misc.Clock, optional
            a clock (default: the clock of the active session)

        """

        if directory is None:
            directory = defaults.eventfile_directory
        OutputFile.__init__(self, filename, directory)
        # never logs into itself
        self.set_logging(False)
        if delimiter is not None:
            self._delimiter = delimiter
        else:
            self._delimiter = defaults.eventfile_delimiter
        if clock is not None:
            self._clock = clock
        else:
            session = _internals.active_session
            if session is None or not session.is_initialized:
                raise RuntimeError(
                    "Cannot find a clock. Initialize Randomtrap!")
            self._clock = session.clock
        self.write_comment("Randomtrap {0}".format(_internals.get_version()))
        self.write_comment("os: {0}".format(uname()))
        self.write_line("Time,Type,Event,Value,Detail")
        self.save()

    @property
    def clock(self):
        """Getter for clock."""
        return self._clock

    @property
    def delimiter(self):
        """Getter for delimiter."""
        return self._delimiter

    def log(self, event):
        """Log an event.

        Parameters
        ----------
        event : anything
            the event to be logged (anything, will be casted to str)

        Returns
        -------
        log_time : int
            the time of logging

        """

        log_time = self._clock.time
        if not isinstance(event, str):
            event = str(event)
        self.write_line(repr(log_time) + self._delimiter + event)
        return log_time

    def warn(self, message):
        """Log a warning message.

        Parameters
        ----------
        message : str
            warning message to log

        """

        self.write_line(repr(self._clock.time) + self._delimiter +
                        "WARNING" + self._delimiter + message)


def json_document(kind, payload, config=None):
    """Return a JSON-ready document with schema version and kind."""

    rtn = {"schema_version": defaults.schema_version, "kind": kind}
    if config is not None:
        rtn["config"] = dict(config)
    rtn.update(payload)
    return rtn


def write_json(path, document):
    """Write a JSON document with sorted keys and a final newline."""

    _make_directory(os.path.dirname(path))
    with open(path, "w") as f:
        f.write(json.dumps(document, sort_keys=True, indent=1))
        f.write(defaults.outputfile_eol)
    _internals.log_event("File,json,{0}".format(path), 1)
    return path


def read_json(path):
    """Read a JSON document, checking its schema version.

    Raises
    ------
    ValueError
        if the schema version is missing or newer than supported

    """

    with open(path) as f:
        document = json.load(f)
    version = document.get("schema_version")
    if version is None or version > defaults.schema_version:
        raise ValueError("Unsupported schema version {0} in '{1}'!".format(
            version, path))
    return document


def write_transcript(path, transcript):
    """Write a play-out transcript as JSON."""
    return write_json(path, json_document("transcript", transcript.to_dict()))


def write_stats(directory, name, rows, variable_names, config=None):
    """Write statistics rows as CSV and as a JSON mirror.

    Parameters
    ----------
    directory : str
    name : str
        file name without extension
    rows : list of dict
    variable_names : list of str
        CSV column order
    config : dict, optional
        run configuration for the headers

    Returns
    -------
    paths : (str, str)
        the CSV and the JSON path

    """

    data = DataFile(name + ".csv", variable_names, directory=directory,
                    config=config)
    for row in rows:
        data.add(dict((k, row.get(k)) for k in variable_names))
    data.save()
    json_path = write_json(os.path.join(directory, name + ".json"),
                           json_document("stats", {"rows": rows}, config))
    return data.fullpath, json_path
