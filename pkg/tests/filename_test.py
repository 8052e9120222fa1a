import os
import tempfile
import unittest

import logging

from walkwait import constants
from walkwait.utils import io

logger = logging.getLogger(__name__)
logging.basicConfig(format = '%(asctime)s %(module)s %(levelname)s: %(message)s',
                datefmt = '%m/%d/%Y %I:%M:%S %p', level = logging.DEBUG)


class Test_filename_test(unittest.TestCase):

    def test_parsing_strings_to_folders(self):
        # act
        actual = io.FileName('/home/user/scenarios', isdir=True)

        # assert
        self.assertEqual('/home/user/scenarios/', actual.getPath())

    def test_windows_separators_are_normalized(self):
        # act
        actual = io.FileName('C:\\walkwait\\s1.json')

        # assert
        self.assertEqual('C:/walkwait/s1.json', actual.getPath())
        self.assertEqual('C:/walkwait/', actual.getDir())

    def test_saved_strings_are_loaded_back(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            # arrange
            target = io.FileName(os.path.join(tmp_dir, 'out', 'sweep.csv'))
            target.getDirAsFileName().makedirs()

            # act
            target.saveStrToFile('param,value\ntw,0.1\n')
            actual = target.loadFileToStr()

            # assert
            self.assertTrue(target.exists())
            self.assertEqual('param,value\ntw,0.1\n', actual)

    def test_reading_json_successfull(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            # arrange
            target = io.FileName(os.path.join(tmp_dir, 's1.json'))
            target.saveStrToFile('{"d": 2, "dist": "uniform:0,0.25"}')

            # act
            actual = target.readJson()

            # assert
            self.assertEqual({'d': 2, 'dist': 'uniform:0,0.25'}, actual)

    def test_when_json_is_malformed_it_is_a_parse_error(self):
        with tempfile.TemporaryDirectory() as tmp_dir:
            # arrange
            target = io.FileName(os.path.join(tmp_dir, 's1.json'))
            target.saveStrToFile('{"d": 2,')

            # act
            with self.assertRaises(constants.ParseError):
                target.readJson()

    def test_when_the_file_is_missing_it_is_a_file_error(self):
        # arrange
        target = io.FileName('/nonexistent/walkwait/s1.json')

        # act
        with self.assertRaises(constants.IoError):
            target.loadFileToStr()


if __name__ == '__main__':
    unittest.main()
